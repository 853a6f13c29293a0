"""Arithmetic of the bicyclic monoid C(p, q).

An element q^i p^j is stored as the pair ``Element(i, j)``.  Every function
here also accepts a plain 2-tuple of non-negative ints.
"""

from __future__ import annotations

import re
from typing import NamedTuple


class Element(NamedTuple):
    i: int
    j: int

    @classmethod
    def of(cls, i, j) -> "Element":
        i, j = int(i), int(j)
        if i < 0 or j < 0:
            raise ValueError(f"exponents must be non-negative, got ({i},{j})")
        return cls(i, j)

    def __str__(self) -> str:
        return format_element(self)

    def is_idempotent(self) -> bool:
        return self.i == self.j


IDENTITY = Element(0, 0)


def mul(a, b) -> Element:
    """Multiply q^k p^l by q^m p^n."""
    k, l = a
    m, n = b
    if l < m:
        return Element(k - l + m, n)
    if l == m:
        return Element(k, n)
    return Element(k, l - m + n)


def inv(a) -> Element:
    return Element(a[1], a[0])


def trace(a) -> tuple[Element, Element]:
    """Return (a a^-1, a^-1 a), i.e. ((i, i), (j, j))."""
    return mul(a, inv(a)), mul(inv(a), a)


def is_idempotent(a) -> bool:
    return a[0] == a[1]


def translate(i: int, j: int, m: int, n: int, x) -> Element:
    """The two-sided shift x -> q^i p^m . x . q^n p^j.

    Restricted to the down-set of q^m p^n it is a bijection onto the down-set
    of q^i p^j, sending q^(m+k) p^(n+k) to q^(i+k) p^(j+k).
    """
    return mul(mul((i, m), x), (n, j))


# -- equation solving ---------------------------------------------------------
#
# Write a = (k, l), x = (m, n).  Then a.x = (k + max(0, m - l), n + max(0, l - m)).
# If a.x = (b0, b1):
#   m <= l  forces k = b0 and n = b1 - (l - m) <= b1, so m <= l;
#   m >  l  forces m = b0 - k + l <= b0 + l and n = b1.
# Every solution therefore lies in the box [0, l + b0] x [0, b1].

def left_solution_bound(a, b) -> tuple[int, int]:
    """Inclusive box (max m, max n) containing every x with a.x = b."""
    return a[1] + b[0], b[1]


def right_solution_bound(c, d) -> tuple[int, int]:
    """Inclusive box containing every x with x.c = d (mirror of the left bound)."""
    n_max, m_max = left_solution_bound(inv(c), inv(d))
    return m_max, n_max


def solve_left(a, b) -> frozenset[Element]:
    """All x with a.x = b."""
    m_max, n_max = left_solution_bound(a, b)
    b = tuple(b)
    return frozenset(
        Element(m, n)
        for m in range(m_max + 1)
        for n in range(n_max + 1)
        if mul(a, (m, n)) == b
    )


def solve_right(c, d) -> frozenset[Element]:
    """All x with x.c = d."""
    return frozenset(inv(y) for y in solve_left(inv(c), inv(d)))


def solve_two_sided(a, c, b) -> frozenset[Element]:
    """All x with a.x.c = b.

    a.(x.c) = b pins x.c to the finite set solve_left(a, b); each value y then
    pins x to solve_right(c, y).
    """
    out: set[Element] = set()
    for y in solve_left(a, b):
        out |= solve_right(c, y)
    return frozenset(out)


# -- notation -----------------------------------------------------------------

def format_element(a) -> str:
    """Print in monoid notation: (0,0) -> '1', (4,1) -> 'q^4 p', (0,3) -> 'p^3'."""
    i, j = a
    parts = []
    for sym, e in (("q", i), ("p", j)):
        if e == 1:
            parts.append(sym)
        elif e > 1:
            parts.append(f"{sym}^{e}")
    return " ".join(parts) or "1"


def format_pair(a) -> str:
    return f"({a[0]},{a[1]})"


class ParseError(ValueError):
    """Malformed element text; ``pos`` is the 0-based offending column."""

    def __init__(self, text: str, pos: int, msg: str):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos}: {text!r}\n  {' ' * (pos + 1)}^")


_PAIR = re.compile(r"\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*$")
_TOKEN = re.compile(r"\s*([qp])\s*(?:\^\s*(\d+))?")


def parse_element(text: str) -> Element:
    """Parse ``"q^i p^j"`` (exponents 0/1 omissible, ``"1"`` is the identity)
    or ``"(i,j)"``."""
    m = _PAIR.match(text)
    if m:
        return Element(int(m.group(1)), int(m.group(2)))
    if text.strip() == "1":
        return IDENTITY
    if not text.strip():
        raise ParseError(text, 0, "empty element")
    exps = {"q": None, "p": None}
    pos = 0
    seen_p = False
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        tok = _TOKEN.match(text, pos)
        if not tok:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(text, bad, "unexpected character")
        sym = tok.group(1)
        sym_pos = tok.start(1)
        if exps[sym] is not None:
            raise ParseError(text, sym_pos, f"repeated {sym!r}")
        if sym == "q" and seen_p:
            raise ParseError(text, sym_pos, "'q' after 'p' is not a normal form")
        seen_p = seen_p or sym == "p"
        exps[sym] = int(tok.group(2)) if tok.group(2) is not None else 1
        pos = tok.end()
    return Element(exps["q"] or 0, exps["p"] or 0)
