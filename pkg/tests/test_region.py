import json
import math
import random

import numpy as np
import pytest
from hypothesis import given, settings

from bicyclic import oracle
from bicyclic.order import down_set, idempotents, up_set, updown_set
from bicyclic.product import cell_product, product_image
from bicyclic.region import (Region, canonicalize, cardinality, complement, difference,
                             equals, intersect, inverse_image, is_cofinite, is_finite, make_cell,
                             member, subset, union)
from bicyclic.topology import basic

from strategies import random_region, random_regions, regions

INF = math.inf


def test_member_examples():
    assert member(Region.quadrant(2), (5, 2))
    assert not member(Region.diagonal_tail((1, 2), 1), (1, 2))
    assert not member(Region.square(3), (3, 4))


def test_boolean_examples():
    assert intersect(Region.quadrant(3), down_set((1, 2))) == Region.diagonal_tail((1, 2), 2)
    assert complement(Region.full()).is_empty()
    assert intersect(Region.diagonal_tail((0, 1), 0), Region.diagonal_tail((2, 0), 0)).is_empty()


def test_subset_examples():
    assert subset(Region.quadrant(5), Region.quadrant(2))
    assert not subset(down_set((0, 0)), Region.quadrant(1))
    assert subset(Region.quadrant(2) & Region.diagonal(0), idempotents())


def test_finiteness_examples():
    assert is_cofinite(basic("tauc", (3, 1), 4))
    assert is_finite(up_set((9, 4))) and cardinality(up_set((9, 4))) == 5
    assert not is_finite(down_set((0, 0)))
    assert cardinality(down_set((0, 0))) == INF


def test_product_examples():
    assert product_image(Region.quadrant(2), Region.quadrant(2)) == Region.quadrant(2)
    r = Region([make_cell(1, 4, 0, INF, -2, 3)])
    assert product_image(Region.point((0, 0)), r) == r


def test_inverse_examples():
    ray = Region([make_cell(3, 3, 1, INF)])
    assert inverse_image(ray) == Region([make_cell(1, INF, 3, 3)])
    assert inverse_image(Region.quadrant(4)) == Region.quadrant(4)
    assert inverse_image(down_set((1, 2))) == down_set((2, 1))


def test_enumerate_examples():
    assert Region.empty().enumerate(5) == []
    assert idempotents().enumerate(3) == [(0, 0), (1, 1), (2, 2), (3, 3)]
    assert Region.quadrant(2).enumerate(3) == [(2, 2), (2, 3), (3, 2), (3, 3)]


def test_canonical_shapes():
    assert Region.empty().cells == ()
    assert Region.full().cells == (make_cell(),)
    assert Region.full().to_json() == {"cells": [{"s": {"min": 0, "max": None},
                                                   "t": {"min": 0, "max": None}}]}
    assert len(Region.quadrant(3).cells) == 1
    assert len(Region.square(3).cells) == 1
    assert make_cell(3, 1) is None


def test_tight_bounds():
    c = make_cell(0, INF, 0, 5, 2, 4)
    assert (c.s_min, c.s_max, c.t_max) == (2, 9, 5)


def test_canonical_form_is_extensional():
    # the same set built three ways
    a = Region.quadrant(2) | Region.point((0, 0))
    b = Region([make_cell(2, INF, 2, INF, 0, INF), make_cell(2, INF, 2, INF, -INF, -1),
                make_cell(0, 0, 0, 0)])
    c = Region.full() - (Region.full() - a)
    assert a == b == c
    assert canonicalize(a) == canonicalize(b) == canonicalize(c)


def _crosscheck_ops(r1, r2, n=40):
    for op, sym in (("union", r1 | r2), ("intersect", r1 & r2), ("difference", r1 - r2)):
        cc = oracle.crosscheck(op, {"a": r1, "b": r2}, n, sym)
        assert cc.passed, (op, r1, r2, cc.first_difference)
    assert oracle.crosscheck("complement", {"a": r1}, n, ~r1).passed
    assert oracle.crosscheck("inverse_image", {"a": r1}, n, r1.inverse()).passed


def test_boolean_ops_against_oracle():
    rs = random_regions(11, 200)
    for r1, r2 in zip(rs, rs[1:] + rs[:1]):
        _crosscheck_ops(r1, r2)


@settings(max_examples=60, deadline=None)
@given(regions, regions)
def test_boolean_laws(r1, r2):
    assert ~~r1 == r1
    assert ~(r1 | r2) == ~r1 & ~r2
    assert ~(r1 & r2) == ~r1 | ~r2
    assert (r1 - r2) == r1 & ~r2
    assert r1.inverse().inverse() == r1
    assert (r1 <= r2) == (r1 - r2).is_empty()
    assert (r1 | r2) == (r2 | r1)


@settings(max_examples=40, deadline=None)
@given(regions, regions)
def test_subset_agrees_with_window(r1, r2):
    # every random region has all finite bounds <= 24, so [0, 60]^2 shows the whole pattern
    m1, m2 = oracle.window_eval(r1, 60), oracle.window_eval(r2, 60)
    assert subset(r1, r2) == (not (m1 & ~m2).any())


def test_cardinality_matches_enumeration():
    for r in random_regions(5, 150):
        if r.is_finite():
            assert r.cardinality() == len(r.enumerate(40))
        assert r.is_cofinite() == (~r).is_finite()


def test_product_against_oracle():
    w = Region.window(25)
    for r1, r2 in zip(random_regions(21, 120, b=8), random_regions(22, 120, b=8)):
        sym = product_image(r1 & w, r2 & w)
        cc = oracle.crosscheck("product_image", {"a": r1, "b": r2}, 25, sym)
        assert cc.passed, (r1, r2, cc.first_difference)


def test_cell_product_is_at_most_two_cells():
    rng = random.Random(3)
    from strategies import random_cell
    for _ in range(300):
        assert len(cell_product(random_cell(rng), random_cell(rng))) <= 2


def test_product_anti_homomorphism():
    for r1, r2 in zip(random_regions(31, 80, b=8), random_regions(32, 80, b=8)):
        assert product_image(r2.inverse(), r1.inverse()) == product_image(r1, r2).inverse()


def test_updown_product_of_opposite_sides():
    # (1,0)'s diagonal times (0,1)'s diagonal misses the identity
    got = product_image(updown_set((1, 0)), updown_set((0, 1)))
    assert got == Region.diagonal_tail((1, 1), 0)
    assert (0, 0) not in got


def test_window_mask_matches_oracle():
    for r in random_regions(41, 100):
        assert np.array_equal(r.window_mask(30), oracle.window_eval(r, 30))


def test_json_round_trip():
    for r in random_regions(51, 100):
        text = r.dumps()
        assert Region.from_json(json.loads(text)) == r
        assert Region.from_json(text).cells == r.cells


@pytest.mark.parametrize("bad", [
    {}, {"cells": 3}, {"cells": [{"s": {"min": -1}}]}, {"cells": [{"s": {"min": "x"}}]},
    {"cells": [{"q": {}}]},
])
def test_json_rejects_malformed(bad):
    with pytest.raises(ValueError):
        Region.from_json(bad)


def test_json_null_means_unbounded():
    r = Region.from_json({"cells": [{"s": {"min": 2, "max": None}, "t": {"min": 2, "max": None}}]})
    assert r == Region.quadrant(2)
    r = Region.from_json({"cells": [{"d": {"min": 1, "max": 1}}]})
    assert r == Region.diagonal(1)


def test_module_functions():
    a, b = Region.quadrant(1), Region.point((0, 0))
    assert union(a, b) == a | b
    assert difference(Region.full(), a) == ~a
    assert equals(union(a, b), Region.full() - Region([make_cell(0, 0, 1, INF),
                                                         make_cell(1, INF, 0, 0)]))
