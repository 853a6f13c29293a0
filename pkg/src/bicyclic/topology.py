"""The neighbourhood-base topologies on C(p, q).

Each topology assigns to a point x and n >= 0 a basic open set

    basic(x, n) = {x} | tail(x, n),

with tails shrinking as n grows:

    tau1      tail = {(s, t) : s, t >= n}
    tau2      tail = {(i + n + r, j + n + r) : r >= 1}   for x = (i, j)
    tauc      tail = omega^2 minus C_n,  C_n = {(s, t) : s, t <= n}
    discrete  tail = empty

Closure asks whether *every* basic set of x meets R.  Because the tails are
nested, this becomes a structural test on the normal form of R:

    tau1   Q(n) meets R for all n  iff  min(s, t) is unbounded on R
    tau2   the diagonal tail of x meets R for all n  iff  R is infinite on x's diagonal
    tauc   omega^2 minus C_n meets R for all n  iff  R is infinite

Interior is the dual statement applied to the complement of R.  When the
test fails, a concrete n witnessing it is found by scanning up to a bound
derived from R (``separation_bound`` / ``interior_bound``).
"""

from __future__ import annotations

from functools import lru_cache

from .core import Element
from .region import Region


class Topology:
    name = "abstract"

    def tail(self, x, n: int) -> Region:
        raise NotImplementedError

    def basic(self, x, n: int) -> Region:
        return _basic(self.name, Element(*x), n)

    def closure(self, r: Region) -> Region:
        raise NotImplementedError

    def interior(self, r: Region) -> Region:
        raise NotImplementedError

    def separation_bound(self, x, r: Region) -> int:
        """For x outside cl(r): an n with basic(x, n) disjoint from r."""
        raise NotImplementedError

    def interior_bound(self, x, r: Region) -> int:
        """For x in int(r): an n with basic(x, n) inside r."""
        raise NotImplementedError

    def __repr__(self):
        return f"<topology {self.name}>"


class Tau1(Topology):
    name = "tau1"

    def tail(self, x, n):
        return Region.quadrant(n)

    def closure(self, r):
        return Region.full() if r.has_unbounded_diagonal() else r

    def interior(self, r):
        return Region.empty() if r.complement().has_unbounded_diagonal() else r

    def separation_bound(self, x, r):
        # every point of r has min(s, t) <= max_position, so Q(max + 1) misses r
        return int(max(r.max_position() + 1, 0))

    def interior_bound(self, x, r):
        return int(max(r.complement().max_position() + 1, 0))


class Tau2(Topology):
    name = "tau2"

    def tail(self, x, n):
        i, j = x
        return Region.diagonal_tail((i + n, j + n), 1)

    def closure(self, r):
        return r | r.unbounded_diagonals()

    def interior(self, r):
        return r & r.unbounded_diagonals()

    @staticmethod
    def _last_position(x, r: Region):
        x_slice = r.slice_at(x[0] - x[1])
        return x_slice[-1][1] if x_slice else -1

    def separation_bound(self, x, r):
        # the tail occupies positions > min(x) + n on x's diagonal
        return int(max(self._last_position(x, r) - min(x), 0))

    def interior_bound(self, x, r):
        return int(max(self._last_position(x, r.complement()) - min(x), 0))


class TauC(Topology):
    name = "tauc"

    def tail(self, x, n):
        return Region.square(n).complement()

    def closure(self, r):
        return r if r.is_finite() else Region.full()

    def interior(self, r):
        return r if r.is_cofinite() else Region.empty()

    def separation_bound(self, x, r):
        return int(max(r.max_coordinate(), 0))

    def interior_bound(self, x, r):
        return int(max(r.complement().max_coordinate(), 0))


class Discrete(Topology):
    name = "discrete"

    def tail(self, x, n):
        return Region.empty()

    def closure(self, r):
        return r

    def interior(self, r):
        return r

    def separation_bound(self, x, r):
        return 0

    def interior_bound(self, x, r):
        return 0


TOPOLOGIES = {t.name: t for t in (Tau1(), Tau2(), TauC(), Discrete())}
NON_DISCRETE = ("tau1", "tau2", "tauc")


def get_topology(top) -> Topology:
    if isinstance(top, Topology):
        return top
    try:
        return TOPOLOGIES[top]
    except KeyError:
        raise ValueError(f"unknown topology {top!r}; expected one of {sorted(TOPOLOGIES)}") from None


@lru_cache(maxsize=1 << 16)
def _basic(name: str, x: Element, n: int) -> Region:
    if n < 0:
        raise ValueError("neighbourhood index must be non-negative")
    return Region.point(x) | TOPOLOGIES[name].tail(x, n)


# -- module-level operations --------------------------------------------------

def basic(top, x, n: int) -> Region:
    return get_topology(top).basic(x, n)


def closure(top, r: Region) -> Region:
    return get_topology(top).closure(r)


def interior(top, r: Region) -> Region:
    return get_topology(top).interior(r)


def is_regular_open(top, r: Region) -> bool:
    t = get_topology(top)
    return t.interior(t.closure(r)) == r


def is_isolated(top, x) -> bool:
    """{x} is open, i.e. x is not in the closure of everything else."""
    t = get_topology(top)
    rest = Region.point(x).complement()
    return x not in t.closure(rest)


def separating_n(top, x, r: Region) -> int | None:
    """Least n with basic(x, n) disjoint from r; None when x is in cl(r)."""
    t = get_topology(top)
    if x in t.closure(r):
        return None
    for n in range(t.separation_bound(x, r) + 1):
        if (t.basic(x, n) & r).is_empty():
            return n
    raise AssertionError(f"separation bound too small for {t.name}, x={x}")


def interior_n(top, x, r: Region) -> int | None:
    """Least n with basic(x, n) inside r; None when x is not in int(r)."""
    t = get_topology(top)
    if x not in t.interior(r):
        return None
    for n in range(t.interior_bound(x, r) + 1):
        if t.basic(x, n) <= r:
            return n
    raise AssertionError(f"interior bound too small for {t.name}, x={x}")


def t1_separation(top, x, y) -> tuple[int, int]:
    """Least (n_x, n_y) with y outside basic(x, n_x) and x outside basic(y, n_y)."""
    if tuple(x) == tuple(y):
        raise ValueError("t1_separation needs two distinct points")
    n_x = separating_n(top, x, Region.point(y))
    n_y = separating_n(top, y, Region.point(x))
    if n_x is None or n_y is None:
        raise ValueError(f"{get_topology(top).name} does not separate {x} and {y}")
    return n_x, n_y


def subspace_closure(top, y: Region, r: Region) -> Region:
    if not r <= y:
        raise ValueError("subspace_closure: R is not contained in Y")
    return closure(top, r) & y


def subspace_interior(top, y: Region, r: Region) -> Region:
    """{x in R : basic(x, n) & Y inside R for some n} = R & int(R | (omega^2 - Y))."""
    if not r <= y:
        raise ValueError("subspace_interior: R is not contained in Y")
    return r & interior(top, r | y.complement())
