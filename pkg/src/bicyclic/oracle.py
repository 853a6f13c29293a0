"""Brute-force ground truth.

Nothing here imports the symbolic multiplication or the region normal form:
products come from rewriting words with the single rule ``pq -> (empty)``, and
window membership is evaluated straight from cell constraints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Window:
    """The square [0, N]^2."""

    N: int

    def __post_init__(self):
        if self.N < 0:
            raise ValueError("window bound must be non-negative")

    def points(self):
        return [(s, t) for s in range(self.N + 1) for t in range(self.N + 1)]


def _clean(word) -> str:
    if not isinstance(word, str):
        word = "".join(word)
    word = "".join(word.split())
    bad = set(word) - {"p", "q"}
    if bad:
        raise ValueError(f"word contains letters outside {{p, q}}: {sorted(bad)}")
    return word


def word_reduce(word, strategy: str = "all") -> tuple[int, int]:
    """Delete ``pq`` factors until none is left; return (#q, #p) of the result.

    ``strategy`` picks which factor goes first: "leftmost", "rightmost", or
    "all" (every non-overlapping occurrence per pass).
    """
    w = _clean(word)
    while "pq" in w:
        if strategy == "all":
            w = w.replace("pq", "")
        elif strategy == "leftmost":
            at = w.find("pq")
            w = w[:at] + w[at + 2:]
        elif strategy == "rightmost":
            at = w.rfind("pq")
            w = w[:at] + w[at + 2:]
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
    i = len(w) - len(w.lstrip("q"))
    rest = w[i:]
    if rest.strip("p"):
        raise ValueError(f"reduced word {w!r} is not of the form q^i p^j")
    return i, len(rest)


def word_of(a) -> str:
    return "q" * a[0] + "p" * a[1]


def oracle_mul(a, b) -> tuple[int, int]:
    return word_reduce(word_of(a) + word_of(b))


_TABLE: list = [None]


def _middle_table(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Normal forms of the middle words p^l q^m for l, m <= n (or more).

    q^k (p^l q^m) p^n: the middle word reduces on its own to q^x p^y and the
    outer letters never meet a p followed by a q, so the full product is
    q^(k+x) p^(y+n).  The table is filled by the rewriting itself: p^l q^m
    with l, m > 0 has exactly one pq factor, and deleting it gives
    p^(l-1) q^(m-1); words with l = 0 or m = 0 are already reduced, which
    word_reduce confirms.  It grows by doubling and is shared between calls.
    """
    cached = _TABLE[0]
    if cached is not None and cached[0].shape[0] > n:
        return cached
    size = 64
    while size <= n:
        size *= 2
    xs = np.zeros((size, size), dtype=np.int64)
    ys = np.zeros((size, size), dtype=np.int64)
    for r in range(size):
        xs[0, r], ys[0, r] = word_reduce("q" * r)
        xs[r, 0], ys[r, 0] = word_reduce("p" * r)
    for l in range(1, size):
        for m in range(1, size):
            # one rewrite step: p^l q^m -> p^(l-1) q^(m-1)
            xs[l, m], ys[l, m] = xs[l - 1, m - 1], ys[l - 1, m - 1]
    _TABLE[0] = (xs, ys)
    return xs, ys


def product_arrays(lhs, rhs):
    lhs = np.asarray(sorted(lhs), dtype=np.int64).reshape(-1, 2)
    rhs = np.asarray(sorted(rhs), dtype=np.int64).reshape(-1, 2)
    if not len(lhs) or not len(rhs):
        return None
    n = int(max(lhs.max(), rhs.max()))
    xs, ys = _middle_table(n)
    k, l = lhs[:, 0][:, None], lhs[:, 1][:, None]
    m, nn = rhs[:, 0][None, :], rhs[:, 1][None, :]
    return k + xs[l, m], ys[l, m] + nn


def oracle_mul_arrays(a_s, a_t, b_s, b_t):
    """Elementwise oracle products of two equally shaped arrays of elements."""
    a_s, a_t, b_s, b_t = (np.asarray(v, dtype=np.int64) for v in (a_s, a_t, b_s, b_t))
    xs, ys = _middle_table(int(max(a_t.max(initial=0), b_s.max(initial=0))))
    return a_s + xs[a_t, b_s], ys[a_t, b_s] + b_t


def oracle_products(lhs, rhs) -> set[tuple[int, int]]:
    """{oracle_mul(a, b) : a in lhs, b in rhs} for finite point collections."""
    arrs = product_arrays(lhs, rhs)
    if arrs is None:
        return set()
    pts = np.unique(np.stack([arrs[0].ravel(), arrs[1].ravel()], axis=1), axis=0)
    return {(int(a), int(b)) for a, b in pts}


def oracle_product_mask(lhs, rhs, n: int) -> np.ndarray:
    """Products of the two point sets as a bitmap on [0, n]^2 (n must cover them)."""
    mask = np.zeros((n + 1, n + 1), dtype=bool)
    arrs = product_arrays(lhs, rhs)
    if arrs is not None:
        mask[arrs[0].ravel(), arrs[1].ravel()] = True
    return mask


def brute_solve_two_sided_fast(a, c, b, n: int) -> set[tuple[int, int]]:
    """Vectorised twin of brute_solve_two_sided (same rewriting table)."""
    a0, a1 = a
    c0, c1 = c
    xs, ys = _middle_table(a1 + c0 + 2 * n + 2)
    s = np.arange(n + 1)[:, None]
    t = np.arange(n + 1)[None, :]
    y_s = a0 + xs[a1, s]
    y_t = ys[a1, s] + t
    z_s = y_s + xs[y_t, c0]
    z_t = ys[y_t, c0] + c1
    hit = (z_s == b[0]) & (z_t == b[1])
    return {(int(u), int(v)) for u, v in zip(*np.nonzero(hit))}


def window_eval(region, window: Window | int) -> np.ndarray:
    """Membership bitmap mask[s, t] for (s, t) in [0, N]^2, read off the raw cells."""
    n = window.N if isinstance(window, Window) else int(window)
    cells = region.cells if hasattr(region, "cells") else region
    s = np.arange(n + 1)[:, None]
    t = np.arange(n + 1)[None, :]
    mask = np.zeros((n + 1, n + 1), dtype=bool)
    for c in cells:
        mask |= _cell_mask(c, s, t)
    return mask


def _cell_mask(c, s, t):
    def ok(v, lo, hi):
        r = np.ones(np.broadcast(v, v).shape, dtype=bool)
        if lo != -math.inf:
            r &= v >= lo
        if hi != math.inf:
            r &= v <= hi
        return r
    return ok(s, c.s_min, c.s_max) & ok(t, c.t_min, c.t_max) & ok(s - t, c.d_min, c.d_max)


def mask_points(mask: np.ndarray) -> list[tuple[int, int]]:
    return [(int(a), int(b)) for a, b in zip(*np.nonzero(mask))]


def first_difference(m1: np.ndarray, m2: np.ndarray):
    diff = np.argwhere(m1 != m2)
    if len(diff) == 0:
        return None
    a, b = diff[0]
    return int(a), int(b)


def brute_solve_left(a, b, n: int) -> set[tuple[int, int]]:
    b = tuple(b)
    return {(m, k) for m in range(n + 1) for k in range(n + 1) if oracle_mul(a, (m, k)) == b}


def brute_solve_right(c, d, n: int) -> set[tuple[int, int]]:
    d = tuple(d)
    return {(m, k) for m in range(n + 1) for k in range(n + 1) if oracle_mul((m, k), c) == d}


def brute_solve_two_sided(a, c, b, n: int) -> set[tuple[int, int]]:
    b = tuple(b)
    return {(m, k) for m in range(n + 1) for k in range(n + 1)
            if oracle_mul(oracle_mul(a, (m, k)), c) == b}


# -- crosscheck ---------------------------------------------------------------

@dataclass
class CrossCheck:
    op_id: str
    passed: bool
    window: int
    first_difference: tuple[int, int] | None = None
    detail: str = ""

    def to_json(self) -> dict:
        return {"op_id": self.op_id, "passed": self.passed, "window": self.window,
                "first_difference": list(self.first_difference) if self.first_difference else None,
                "detail": self.detail}


_POINTWISE = {
    "union": lambda a, b: a | b,
    "intersect": lambda a, b: a & b,
    "difference": lambda a, b: a & ~b,
}


def crosscheck(op_id: str, inputs: dict, window: Window | int, symbolic) -> CrossCheck:
    """Compare a symbolic result against brute force on a window.

    ``inputs`` holds raw cell lists (or regions) under the keys the op needs:
    "a"/"b" for set operations and products, the equation sides for solvers,
    and "topology"/"region"/"depth" for the closure and interior tests.
    """
    n = window.N if isinstance(window, Window) else int(window)

    if op_id in _POINTWISE or op_id in ("complement", "inverse_image"):
        a = window_eval(inputs["a"], n)
        if op_id in _POINTWISE:
            expected = _POINTWISE[op_id](a, window_eval(inputs["b"], n))
        elif op_id == "complement":
            expected = ~a
        else:
            expected = a.T.copy()
        diff = first_difference(window_eval(symbolic, n), expected)
        return CrossCheck(op_id, diff is None, n, diff)

    if op_id == "product_image":
        # the caller multiplies the factors cut down to the window, so the
        # brute-force product set is complete (products reach 2N)
        a_pts = mask_points(window_eval(inputs["a"], n))
        b_pts = mask_points(window_eval(inputs["b"], n))
        expected = oracle_product_mask(a_pts, b_pts, 2 * n)
        diff = first_difference(window_eval(symbolic, 2 * n), expected)
        return CrossCheck(op_id, diff is None, n, diff,
                          "factors restricted to the window; products compared on [0, 2N]^2")

    if op_id in ("solve_left", "solve_right", "solve_two_sided"):
        if op_id == "solve_left":
            expected = brute_solve_left(inputs["a"], inputs["b"], n)
        elif op_id == "solve_right":
            expected = brute_solve_right(inputs["c"], inputs["d"], n)
        else:
            expected = brute_solve_two_sided(inputs["a"], inputs["c"], inputs["b"], n)
        got = {tuple(x) for x in symbolic}
        inside = {x for x in got if max(x) <= n}
        bad = sorted(inside ^ expected)
        return CrossCheck(op_id, not bad, n, bad[0] if bad else None,
                          f"{len(got)} solutions, {len(got) - len(inside)} outside the window")

    if op_id in ("closure-membership", "interior-membership"):
        return _crosscheck_limit(op_id, inputs, n, symbolic)

    raise ValueError(f"unknown crosscheck op {op_id!r}")


def brute_basic(topology: str, x, k: int, n: int) -> np.ndarray:
    """Basic neighbourhood straight from its definition, as a window mask."""
    i, j = x
    s = np.arange(n + 1)[:, None]
    t = np.arange(n + 1)[None, :]
    if topology == "tau1":
        mask = (s >= k) & (t >= k)
    elif topology == "tau2":
        mask = (s - t == i - j) & (s > i + k)
    elif topology == "tauc":
        mask = (s > k) | (t > k)
    elif topology == "discrete":
        mask = np.zeros((n + 1, n + 1), dtype=bool)
    else:
        raise ValueError(f"unknown topology {topology!r}")
    mask = mask.copy()
    if i <= n and j <= n:
        mask[i, j] = True
    return mask


def _reach(cells) -> int:
    finite = [abs(v) for c in cells
              for v in (c.s_min, c.s_max, c.t_min, c.t_max, c.d_min, c.d_max) if abs(v) != math.inf]
    return max(finite, default=0)


def _crosscheck_limit(op_id, inputs, n, symbolic) -> CrossCheck:
    """Bounded-k evidence for the structural closure / interior tests.

    closure:  x in cl(R) must meet R inside basic(x, k) for every k <= depth;
              x outside cl(R) must miss R for some k <= depth.
    interior: x in int(R) must have some basic(x, k), k <= depth, inside R;
              x in R but not in int(R) must have no such k.
    Inclusions are judged on a window reaching well past every finite bound
    of R, where its pattern has settled.
    """
    top = inputs["topology"]
    cells = inputs["region"].cells if hasattr(inputs["region"], "cells") else inputs["region"]
    depth = inputs.get("depth", 30)
    big = n + 2 * _reach(cells) + depth + 4
    r_mask = window_eval(cells, big)
    for x in Window(n).points():
        claimed = x in symbolic
        if op_id == "closure-membership":
            misses = [k for k in range(depth + 1)
                      if not (brute_basic(top, x, k, big) & r_mask).any()]
            if claimed and misses:
                return CrossCheck(op_id, False, n, x, f"basic(x,{misses[0]}) misses R")
            if not claimed and not misses:
                return CrossCheck(op_id, False, n, x, f"no k <= {depth} separates x from R")
        else:
            if not r_mask[x]:
                if claimed:
                    return CrossCheck(op_id, False, n, x, "interior point outside R")
                continue
            fits = [k for k in range(depth + 1)
                    if not (brute_basic(top, x, k, big) & ~r_mask).any()]
            if claimed != bool(fits):
                return CrossCheck(op_id, False, n, x,
                                  f"symbolic says {claimed}, window fits at {fits[:3]}")
    return CrossCheck(op_id, True, n, None, f"depth {depth}, evaluation window {big}")
