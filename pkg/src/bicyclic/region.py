"""Decidable subsets of omega^2 built from difference-bound cells.

A cell is the set of (s, t) in omega^2 with

    s_min <= s <= s_max,   t_min <= t <= t_max,   d_min <= s - t <= d_max.

A Region is a finite union of cells.  Internally a region is kept in a
diagonal normal form: every point lies on the diagonal d = s - t at position
k = min(s, t), and a region is described by the set of positions it occupies
on each diagonal.  For one cell the per-diagonal position set is an interval
that stops changing once |d| exceeds twice the largest finite bound, so a
region is fully described by

    - a pattern used for all diagonals d < lo,
    - explicit patterns for lo <= d <= hi,
    - a pattern used for all diagonals d > hi.

With lo and hi pushed inward as far as possible this description is unique,
which gives decidable, canonical equality.  Boolean operations act slice by
slice.  Infinite bounds are ``math.inf`` (never a sentinel integer).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

from .core import Element

INF = math.inf

# A slice is a tuple of disjoint, non-adjacent, sorted intervals (a, b) of
# positions k >= 0, with b possibly INF.
Slice = tuple

EMPTY_SLICE: Slice = ()
FULL_SLICE: Slice = ((0, INF),)


def _as_bound(x):
    if x is None or x == INF or x == -INF:
        return x
    return int(x)


def _slice_normalize(ivs) -> Slice:
    ivs = sorted((a, b) for a, b in ivs if a <= b)
    out: list[list] = []
    for a, b in ivs:
        if out and a <= out[-1][1] + 1:
            if b > out[-1][1]:
                out[-1][1] = b
        else:
            out.append([a, b])
    return tuple((a, b) for a, b in out)


def _slice_union(x: Slice, y: Slice) -> Slice:
    if not x:
        return y
    if not y or x == y:
        return x
    if len(x) == 1 and len(y) == 1:
        (a, b), (c, d) = x[0], y[0]
        if c <= b + 1 and a <= d + 1:
            return ((min(a, c), max(b, d)),)
        return (x[0], y[0]) if a < c else (y[0], x[0])
    return _slice_normalize(x + y)


def _slice_intersect(x: Slice, y: Slice) -> Slice:
    out = []
    i = j = 0
    while i < len(x) and j < len(y):
        a = max(x[i][0], y[j][0])
        b = min(x[i][1], y[j][1])
        if a <= b:
            out.append((a, b))
        if x[i][1] < y[j][1]:
            i += 1
        else:
            j += 1
    return tuple(out)


def _slice_complement(x: Slice) -> Slice:
    out = []
    nxt = 0
    for a, b in x:
        if a > nxt:
            out.append((nxt, a - 1))
        nxt = b + 1
    if nxt != INF:
        out.append((nxt, INF))
    return tuple(out)


def _slice_difference(x: Slice, y: Slice) -> Slice:
    return _slice_intersect(x, _slice_complement(y))


def _slice_size(x: Slice):
    return sum(b - a + 1 for a, b in x)


def _slice_unbounded(x: Slice) -> bool:
    return bool(x) and x[-1][1] == INF


def _slice_contains(x: Slice, k: int) -> bool:
    return any(a <= k <= b for a, b in x)


# -- cells --------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Cell:
    """A difference-bound cell; build with :func:`make_cell` to get tight bounds."""

    s_min: int
    s_max: object
    t_min: int
    t_max: object
    d_min: object
    d_max: object

    def contains(self, x) -> bool:
        s, t = x
        return (self.s_min <= s <= self.s_max and self.t_min <= t <= self.t_max
                and self.d_min <= s - t <= self.d_max)

    def is_finite(self) -> bool:
        return self.s_max != INF and self.t_max != INF

    def inverse(self) -> "Cell":
        return Cell(self.t_min, self.t_max, self.s_min, self.s_max, -self.d_max, -self.d_min)

    def slice_at(self, d: int) -> Slice:
        """Positions k = min(s, t) occupied on diagonal d."""
        if d < self.d_min or d > self.d_max:
            return EMPTY_SLICE
        if d >= 0:
            lo = max(self.t_min, self.s_min - d, 0)
            hi = min(self.t_max, self.s_max - d)
        else:
            lo = max(self.s_min, self.t_min + d, 0)
            hi = min(self.s_max, self.t_max + d)
        return ((lo, hi),) if lo <= hi else EMPTY_SLICE

    def settle_radius(self) -> int:
        """Beyond |d| > radius, slice_at(d) no longer depends on d."""
        finite = [abs(v) for v in (self.s_min, self.s_max, self.t_min,
                                   self.t_max, self.d_min, self.d_max) if abs(v) != INF]
        return 2 * max(finite, default=0) + 1

    def to_json(self) -> dict:
        def b(v):
            return None if abs(v) == INF else int(v)
        out = {"s": {"min": b(self.s_min), "max": b(self.s_max)},
               "t": {"min": b(self.t_min), "max": b(self.t_max)}}
        # d is written only when the s/t box does not already imply it
        if self.d_min > self.s_min - self.t_max or self.d_max < self.s_max - self.t_min:
            out["d"] = {"min": b(self.d_min), "max": b(self.d_max)}
        return out

    def __repr__(self) -> str:
        def r(lo, hi):
            lo = "-inf" if lo == -INF else lo
            hi = "inf" if hi == INF else hi
            return f"[{lo},{hi}]"
        return (f"Cell(s{r(self.s_min, self.s_max)} t{r(self.t_min, self.t_max)} "
                f"d{r(self.d_min, self.d_max)})")


def make_cell(s_min=0, s_max=INF, t_min=0, t_max=INF, d_min=-INF, d_max=INF) -> Cell | None:
    """Tighten the constraints to their closure; None if the cell is empty.

    Difference constraints with integer bounds are closed exactly by
    propagating through s = t + d, so the tightened bounds are attained.
    """
    s_min, t_min = max(_as_bound(s_min), 0), max(_as_bound(t_min), 0)
    s_max, t_max = _as_bound(s_max), _as_bound(t_max)
    d_min, d_max = _as_bound(d_min), _as_bound(d_max)
    for _ in range(3):
        s_min = max(s_min, t_min + d_min)
        s_max = min(s_max, t_max + d_max)
        t_min = max(t_min, s_min - d_max)
        t_max = min(t_max, s_max - d_min)
        d_min = max(d_min, s_min - t_max)
        d_max = min(d_max, s_max - t_min)
    if s_min > s_max or t_min > t_max or d_min > d_max:
        return None
    return Cell(*(v if abs(v) == INF else int(v)
                  for v in (s_min, s_max, t_min, t_max, d_min, d_max)))


def cell_from_json(obj: dict) -> Cell | None:
    def get(key, side, default):
        rng = obj.get(key)
        if rng is None or rng.get(side) is None:
            return default
        v = rng[side]
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"bound {key}.{side} must be an integer or null, got {v!r}")
        if key != "d" and v < 0:
            raise ValueError(f"bound {key}.{side} must be non-negative, got {v}")
        return v
    for key in obj:
        if key not in ("s", "t", "d"):
            raise ValueError(f"unknown cell key {key!r}")
    return make_cell(get("s", "min", 0), get("s", "max", INF),
                     get("t", "min", 0), get("t", "max", INF),
                     get("d", "min", -INF), get("d", "max", INF))


# -- normal form --------------------------------------------------------------

class _Diagonals:
    """Canonical per-diagonal description (see module docstring)."""

    __slots__ = ("lo", "left", "mid", "right", "_hash")

    def __init__(self, lo: int, left: Slice, mid: tuple, right: Slice):
        mid = list(mid)
        while mid and mid[-1] == right:
            mid.pop()
        while mid and mid[0] == left:
            mid.pop(0)
            lo += 1
        if not mid and left == right:
            lo = 0
        self.lo = lo
        self.left = left
        self.mid = tuple(mid)
        self.right = right
        self._hash = None

    @property
    def hi(self) -> int:
        return self.lo + len(self.mid) - 1

    def at(self, d: int) -> Slice:
        if d < self.lo:
            return self.left
        if d > self.hi:
            return self.right
        return self.mid[d - self.lo]

    def key(self):
        return (self.lo, self.left, self.mid, self.right)

    def __eq__(self, other):
        return isinstance(other, _Diagonals) and self.key() == other.key()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def combine(self, other: "_Diagonals", op) -> "_Diagonals":
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        mid = tuple(map(op, self._span(lo, hi), other._span(lo, hi)))
        return _Diagonals(lo, op(self.left, other.left), mid, op(self.right, other.right))

    def _span(self, lo: int, hi: int) -> list:
        """Slices for diagonals lo..hi (lo <= self.lo, hi >= self.hi)."""
        return ([self.left] * (self.lo - lo) + list(self.mid)
                + [self.right] * (hi - self.lo - len(self.mid) + 1))

    def map(self, f) -> "_Diagonals":
        return _Diagonals(self.lo, f(self.left), tuple(f(m) for m in self.mid), f(self.right))

    def slices(self) -> Iterator[Slice]:
        yield self.left
        yield from self.mid
        yield self.right


def _single_cell_nf(c: Cell) -> _Diagonals:
    r = c.settle_radius()
    lo = -r if c.d_min == -INF else c.d_min
    hi = r if c.d_max == INF else c.d_max
    left = c.slice_at(-r - 1) if c.d_min == -INF else EMPTY_SLICE
    right = c.slice_at(r + 1) if c.d_max == INF else EMPTY_SLICE
    mid = tuple(c.slice_at(d) for d in range(lo, hi + 1))
    return _Diagonals(lo, left, mid, right)


_EMPTY_NF = _Diagonals(0, EMPTY_SLICE, (), EMPTY_SLICE)


def _diagonals_from_cells(cells: Iterable[Cell]) -> _Diagonals:
    nf = _EMPTY_NF
    for c in set(cells):
        nf = nf.combine(_cell_nf(c), _slice_union)
    return nf


def _diag_cell(d: int, a, b) -> Cell:
    # positions [a, b] on diagonal d
    if d >= 0:
        return make_cell(a + d, b + d, a, b, d, d)
    return make_cell(a, b, a - d, b - d, d, d)


def _emit_cells(nf: _Diagonals) -> list[Cell]:
    """Turn the normal form into a disjoint list of cells (deterministic)."""
    cells = []
    first = min(nf.lo, 0)
    last = max(nf.hi, -1)
    for d in range(first, last + 1):
        for a, b in nf.at(d):
            cells.append(_diag_cell(d, a, b))
    for a, b in nf.left:
        # diagonals d <= first - 1 <= -1, where the position is s
        cells.append(make_cell(a, b, a - (first - 1), INF, -INF, first - 1))
    for a, b in nf.right:
        # diagonals d >= last + 1 >= 0, where the position is t
        cells.append(make_cell(a + last + 1, INF, a, b, last + 1, INF))
    return sorted(cells)


def _hull(a: Cell, b: Cell) -> Cell:
    return make_cell(min(a.s_min, b.s_min), max(a.s_max, b.s_max),
                     min(a.t_min, b.t_min), max(a.t_max, b.t_max),
                     min(a.d_min, b.d_min), max(a.d_max, b.d_max))


@lru_cache(maxsize=1 << 17)
def _cell_nf(c: Cell) -> _Diagonals:
    return _single_cell_nf(c)


def _merge_cells(cells: list[Cell]) -> list[Cell]:
    """Greedily replace pairs of cells by their hull when the hull adds no points.

    Deterministic on sorted input, so a canonical input gives a canonical output.
    """
    cells = sorted(cells)
    changed = True
    while changed:
        changed = False
        x = 0
        while x < len(cells):
            y = x + 1
            while y < len(cells):
                h = _hull(cells[x], cells[y])
                pair = _cell_nf(cells[x]).combine(_cell_nf(cells[y]), _slice_union)
                if _cell_nf(h) == pair:
                    cells[x] = h
                    del cells[y]
                    changed = True
                else:
                    y += 1
            x += 1
        cells.sort()
    return cells


# -- regions ------------------------------------------------------------------

class Region:
    """Immutable subset of omega^2; equality is extensional."""

    __slots__ = ("_nf", "__dict__")

    def __init__(self, cells: Iterable[Cell | None] = ()):
        self._nf = _diagonals_from_cells(c for c in cells if c is not None)

    @classmethod
    def _from_nf(cls, nf: _Diagonals) -> "Region":
        r = cls.__new__(cls)
        r._nf = nf
        return r

    # construction helpers

    @classmethod
    def empty(cls) -> "Region":
        return cls()

    @classmethod
    def full(cls) -> "Region":
        return cls([make_cell()])

    @classmethod
    def point(cls, x) -> "Region":
        s, t = x
        return cls([make_cell(s, s, t, t)])

    @classmethod
    def points(cls, xs) -> "Region":
        return cls(make_cell(s, s, t, t) for s, t in xs)

    @classmethod
    def cell(cls, **bounds) -> "Region":
        return cls([make_cell(**bounds)])

    @classmethod
    def quadrant(cls, n: int) -> "Region":
        """{(s, t) : s, t >= n}"""
        return cls([make_cell(s_min=n, t_min=n)])

    @classmethod
    def square(cls, n: int) -> "Region":
        """C_n = {(s, t) : s, t <= n}"""
        return cls([make_cell(s_max=n, t_max=n)])

    @classmethod
    def diagonal(cls, d: int) -> "Region":
        return cls([make_cell(d_min=d, d_max=d)])

    @classmethod
    def diagonal_tail(cls, anchor, offset: int = 0) -> "Region":
        """{(i + k, j + k) : k >= offset}"""
        i, j = anchor
        return cls([make_cell(s_min=i + offset, t_min=j + offset, d_min=i - j, d_max=i - j)])

    @classmethod
    def window(cls, n: int) -> "Region":
        return cls.square(n)

    # canonical view

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Canonical cell list: equal regions give identical lists."""
        return tuple(_merge_cells(_emit_cells(self._nf)))

    def __eq__(self, other):
        return isinstance(other, Region) and self._nf == other._nf

    def __hash__(self):
        return hash(self._nf)

    def __repr__(self) -> str:
        if self.is_empty():
            return "Region(empty)"
        return "Region(" + " | ".join(map(repr, self.cells)) + ")"

    # queries

    def __contains__(self, x) -> bool:
        s, t = x
        return _slice_contains(self._nf.at(s - t), min(s, t))

    def member(self, x) -> bool:
        return x in self

    def is_empty(self) -> bool:
        return not any(self._nf.slices())

    def is_finite(self) -> bool:
        nf = self._nf
        return not nf.left and not nf.right and not any(_slice_unbounded(m) for m in nf.mid)

    def cardinality(self):
        """Number of points, or ``math.inf``."""
        if not self.is_finite():
            return INF
        return int(sum(_slice_size(m) for m in self._nf.mid))

    def is_cofinite(self) -> bool:
        return self.complement().is_finite()

    def slice_at(self, d: int) -> Slice:
        """Occupied positions k = min(s, t) on diagonal s - t = d."""
        return self._nf.at(d)

    def has_unbounded_diagonal(self) -> bool:
        """Some diagonal carries infinitely many points, i.e. min(s, t) is unbounded."""
        return any(_slice_unbounded(x) for x in self._nf.slices())

    def max_position(self):
        """sup of min(s, t) over the region (-1 if empty, inf if unbounded)."""
        best = -1
        for x in self._nf.slices():
            if x:
                best = max(best, x[-1][1])
        return best

    def max_coordinate(self):
        """sup of max(s, t) over the region (-1 if empty, inf if infinite)."""
        if not self.is_finite():
            return INF
        nf = self._nf
        best = -1
        for d, x in zip(range(nf.lo, nf.hi + 1), nf.mid):
            if x:
                best = max(best, x[-1][1] + abs(d))
        return best

    def unbounded_diagonals(self) -> "Region":
        """Union of the full diagonals on which this region is infinite."""
        return Region._from_nf(self._nf.map(
            lambda x: FULL_SLICE if _slice_unbounded(x) else EMPTY_SLICE))

    # boolean algebra

    def __or__(self, other: "Region") -> "Region":
        return Region._from_nf(self._nf.combine(other._nf, _slice_union))

    def __and__(self, other: "Region") -> "Region":
        return Region._from_nf(self._nf.combine(other._nf, _slice_intersect))

    def __sub__(self, other: "Region") -> "Region":
        return Region._from_nf(self._nf.combine(other._nf, _slice_difference))

    def __xor__(self, other: "Region") -> "Region":
        return (self - other) | (other - self)

    def __invert__(self) -> "Region":
        return self.complement()

    def __le__(self, other: "Region") -> bool:
        return (self - other).is_empty()

    def __ge__(self, other: "Region") -> bool:
        return other <= self

    def complement(self) -> "Region":
        return Region._from_nf(self._nf.map(_slice_complement))

    def inverse(self) -> "Region":
        """{x^-1 : x in R}: reflect s <-> t, i.e. diagonal d -> -d."""
        nf = self._nf
        mid = tuple(reversed(nf.mid))
        return Region._from_nf(_Diagonals(-nf.hi, nf.right, mid, nf.left))

    # windows

    def enumerate(self, n: int) -> list[Element]:
        """Members with both coordinates <= n, in lexicographic order."""
        mask = self.window_mask(n)
        return [Element(int(s), int(t)) for s, t in zip(*np.nonzero(mask))]

    def window_mask(self, n: int) -> np.ndarray:
        """Boolean (n+1) x (n+1) array, mask[s, t] = (s, t) in R."""
        mask = np.zeros((n + 1, n + 1), dtype=bool)
        idx = np.arange(n + 1)
        for d in range(-n, n + 1):
            x = self._nf.at(d)
            if not x:
                continue
            length = n + 1 - abs(d)
            ks = idx[:length]
            hit = np.zeros(length, dtype=bool)
            for a, b in x:
                if a >= length:
                    break
                hit[a:min(b, length - 1) + 1] = True
            if d >= 0:
                mask[ks[hit] + d, ks[hit]] = True
            else:
                mask[ks[hit], ks[hit] - d] = True
        return mask

    # serialization

    def to_json(self) -> dict:
        return {"cells": [c.to_json() for c in self.cells]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, obj) -> "Region":
        if isinstance(obj, str):
            obj = json.loads(obj)
        if not isinstance(obj, dict) or not isinstance(obj.get("cells"), list):
            raise ValueError('region JSON must be an object with a "cells" list')
        return cls(cell_from_json(c) for c in obj["cells"])


# functional spellings

def member(r: Region, x) -> bool:
    return x in r


def union(a: Region, b: Region) -> Region:
    return a | b


def intersect(a: Region, b: Region) -> Region:
    return a & b


def difference(a: Region, b: Region) -> Region:
    return a - b


def complement(r: Region) -> Region:
    return r.complement()


def subset(a: Region, b: Region) -> bool:
    return a <= b


def equals(a: Region, b: Region) -> bool:
    return a == b


def is_empty(r: Region) -> bool:
    return r.is_empty()


def is_finite(r: Region) -> bool:
    return r.is_finite()


def is_cofinite(r: Region) -> bool:
    return r.is_cofinite()


def cardinality(r: Region):
    return r.cardinality()


def inverse_image(r: Region) -> Region:
    return r.inverse()


def enumerate_window(r: Region, n: int) -> list[Element]:
    return r.enumerate(n)


def canonicalize(r: Region) -> tuple[Cell, ...]:
    return r.cells
