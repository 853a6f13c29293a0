import itertools
import math

import pytest

from bicyclic import oracle
from bicyclic.order import down_set, idempotents, updown_set
from bicyclic.region import Region, make_cell
from bicyclic.topology import (NON_DISCRETE, TOPOLOGIES, basic, closure, get_topology, interior,
                               interior_n, is_isolated, is_regular_open, separating_n,
                               subspace_closure, subspace_interior, t1_separation)

from strategies import random_regions

INF = math.inf
ALL = sorted(TOPOLOGIES)


def test_basic_examples():
    assert basic("tau1", (0, 0), 2) == Region.point((0, 0)) | Region.quadrant(2)
    assert basic("tau2", (1, 0), 2) == Region.point((1, 0)) | Region.diagonal_tail((3, 2), 1)
    assert basic("tauc", (1, 1), 2) == Region.point((1, 1)) | ~Region.square(2)
    assert basic("discrete", (4, 4), 7) == Region.point((4, 4))


@pytest.mark.parametrize("top", ALL)
def test_basic_matches_definition_on_window(top):
    for x in oracle.Window(5).points():
        for n in range(6):
            assert (basic(top, x, n).window_mask(20) == oracle.brute_basic(top, x, n, 20)).all()


@pytest.mark.parametrize("top", ALL)
def test_base_axioms(top):
    for x in oracle.Window(10).points():
        for n in range(11):
            assert x in basic(top, x, n)
            assert basic(top, x, n + 1) <= basic(top, x, n)


def test_unknown_topology():
    with pytest.raises(ValueError):
        get_topology("tau9")
    with pytest.raises(ValueError):
        basic("tau1", (0, 0), -1)


def test_isolated_points():
    assert not is_isolated("tau2", (3, 3))
    assert is_isolated("discrete", (3, 3))
    assert not is_isolated("tau1", (0, 0))
    for x in oracle.Window(10).points():
        for top in NON_DISCRETE:
            assert not is_isolated(top, x)
        assert is_isolated("discrete", x)


def test_closure_examples():
    assert closure("tau2", basic("tau2", (1, 2), 1)) == updown_set((1, 2))
    assert closure("tau1", basic("tau1", (0, 0), 3)) == Region.full()
    finite = Region.points([(0, 4), (7, 2), (3, 3)])
    assert closure("tauc", finite) == finite


def test_interior_examples():
    assert interior("tau1", Region.full()) == Region.full()
    assert interior("tau1", Region.point((0, 0)) | down_set((2, 2))).is_empty()
    w = basic("tauc", (1, 1), 2)
    assert interior("tauc", w) == w


def test_regular_open_examples():
    assert not is_regular_open("tau1", basic("tau1", (0, 0), 2))
    assert not is_regular_open("tau2", basic("tau2", (1, 2), 1))
    for r in random_regions(3, 20):
        assert is_regular_open("discrete", r)


def test_closure_of_tau2_basic_is_whole_diagonal():
    for x in oracle.Window(8).points():
        for n in range(9):
            o = basic("tau2", x, n)
            assert closure("tau2", o) == updown_set(x)
            rest = updown_set(x) - o
            assert rest.is_finite() and rest.cardinality() == min(x) + n


def test_tauc_basics_are_cofinite():
    for x in oracle.Window(8).points():
        for n in range(9):
            assert basic("tauc", x, n).is_cofinite()


@pytest.mark.parametrize("top", ALL)
def test_monotone_laws(top):
    for r in random_regions(17, 60):
        cl, it = closure(top, r), interior(top, r)
        assert r <= cl
        assert closure(top, cl) == cl
        assert it <= r
        assert interior(top, it) == it
        assert interior(top, r) == ~closure(top, ~r)


@pytest.mark.parametrize("top", ALL)
def test_closure_against_bounded_n_evidence(top):
    for r in random_regions(23, 15, b=6):
        cl = closure(top, r)
        for x in oracle.Window(8).points():
            n = separating_n(top, x, r)
            if x in cl:
                assert n is None
                assert all(not (basic(top, x, k) & r).is_empty() for k in range(31))
            else:
                assert (basic(top, x, n) & r).is_empty()
                assert n == 0 or not (basic(top, x, n - 1) & r).is_empty()


@pytest.mark.parametrize("top", ALL)
def test_interior_witness_is_least(top):
    for r in random_regions(29, 15, b=6):
        it = interior(top, r)
        for x in oracle.Window(8).points():
            n = interior_n(top, x, r)
            assert (n is not None) == (x in it)
            if n is not None:
                assert basic(top, x, n) <= r
                assert n == 0 or not basic(top, x, n - 1) <= r


def test_t1_separation_examples():
    assert t1_separation("tau1", (0, 0), (5, 5)) == (6, 1)
    # (1,1) leaves W_n((0,0)) once n >= 1, but (0,0) is never in a tail of W_n((1,1))
    assert t1_separation("tauc", (0, 0), (1, 1)) == (1, 0)
    assert t1_separation("discrete", (2, 3), (4, 1)) == (0, 0)
    with pytest.raises(ValueError):
        t1_separation("tau1", (2, 2), (2, 2))


@pytest.mark.parametrize("top", ALL)
def test_t1_on_window(top):
    pts = list(oracle.Window(8).points())
    for x, y in itertools.combinations(pts, 2):
        nx, ny = t1_separation(top, x, y)
        assert y not in basic(top, x, nx) and x not in basic(top, y, ny)


def test_subspace_examples():
    y = down_set((1, 2))
    v = basic("tau2", (1, 2), 1) & y
    assert subspace_closure("tau2", y, v) == y
    e = idempotents()
    assert subspace_closure("tau1", e, Region.diagonal_tail((5, 5), 0)) == e
    for top in ALL:
        assert subspace_closure(top, e, Region.empty()).is_empty()
        assert subspace_interior(top, e, Region.empty()).is_empty()


def test_subspace_interior():
    e = idempotents()
    tail = Region.diagonal_tail((3, 3), 0)
    # in tau2 each idempotent's trace is itself plus a tail further out
    assert subspace_interior("tau2", e, tail) == tail
    assert subspace_interior("tau1", e, tail) == tail
    assert subspace_interior("tauc", e, Region.point((0, 0))).is_empty()
    assert subspace_interior("discrete", e, Region.point((0, 0))) == Region.point((0, 0))


def test_subspace_requires_subset():
    with pytest.raises(ValueError):
        subspace_closure("tau1", idempotents(), Region.point((1, 0)))
    with pytest.raises(ValueError):
        subspace_interior("tau1", idempotents(), Region.point((1, 0)))
