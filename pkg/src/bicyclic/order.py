"""The natural partial order on C(p, q) and its order sets.

q^i p^j <= q^s p^t  iff  i >= s and i - j = s - t, so comparable elements
share a diagonal and "smaller" means further out along it.
"""

from __future__ import annotations

from .core import Element, mul
from .region import Region, make_cell


def leq(a, b) -> bool:
    return a[0] >= b[0] and a[0] - a[1] == b[0] - b[1]


def leq_by_witness(a, b, bound: int) -> bool:
    """a <= b via an explicit idempotent: a = b.(k, k) for some k <= bound."""
    a = tuple(a)
    return any(mul(b, (k, k)) == a for k in range(bound + 1))


def up_set(a) -> Region:
    """{(i - k, j - k) : 0 <= k <= min(i, j)}, finite."""
    i, j = a
    return Region([make_cell(s_max=i, t_max=j, d_min=i - j, d_max=i - j)])


def down_set(a) -> Region:
    """{(i + k, j + k) : k >= 0}"""
    return Region.diagonal_tail(a, 0)


def strict_down_set(a) -> Region:
    return Region.diagonal_tail(a, 1)


def updown_set(a) -> Region:
    """Everything comparable with a: the whole diagonal through a."""
    return up_set(a) | down_set(a)


def idempotents() -> Region:
    """E(C(p, q)) = {(k, k)}"""
    return Region.diagonal(0)


def up_elements(a) -> list[Element]:
    i, j = a
    return [Element(i - k, j - k) for k in range(min(i, j) + 1)]
