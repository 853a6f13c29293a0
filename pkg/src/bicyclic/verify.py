"""Verifiers for the algebraic and topological claims about C(p, q).

Each verifier sweeps an exhaustive finite parameter box, decides every
instance with exact region arithmetic and returns a WitnessReport.  A report
is "verified" only when every swept instance passed; otherwise it carries
concrete counterexamples (capped at MAX_WITNESSES, with the total count in
``failures``).  Search-type claims may end "inconclusive_budget".

With ``crosscheck=True`` a seeded 10% sample of the symbolic checks is
repeated by the brute-force oracle on a window and any disagreement is
recorded under ``report.crosscheck``.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

import numpy as np

from . import oracle
from .core import Element, inv, mul, solve_two_sided, trace, translate
from .order import down_set, idempotents, updown_set
from .product import left_shift_image, product_image, right_shift_image
from .region import Region
from .topology import (NON_DISCRETE, TOPOLOGIES, basic, closure, get_topology, interior,
                       is_isolated, subspace_closure)

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
INCONCLUSIVE = "inconclusive_budget"
VERDICTS = (VERIFIED, COUNTEREXAMPLE, INCONCLUSIVE)

MAX_WITNESSES = 20
CROSSCHECK_WINDOW = 40
CROSSCHECK_RATE = 0.1


def _js(obj):
    """Make witnesses JSON friendly: regions become their cell lists, tuples lists."""
    if isinstance(obj, Region):
        return obj.to_json()
    if isinstance(obj, dict):
        return {str(k): _js(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [_js(v) for v in items]
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


@dataclass
class WitnessReport:
    claim_id: str
    verdict: str = VERIFIED
    parameters: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    checked: int = 0
    failures: int = 0
    notes: list = field(default_factory=list)
    crosscheck: dict | None = None
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == VERIFIED

    def witness(self, instance, outcome) -> None:
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append({"input": _js(instance), "witness": _js(outcome)})

    def fail(self, instance, outcome) -> None:
        self.failures += 1
        self.verdict = COUNTEREXAMPLE
        self.witness(instance, outcome)

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "claim_id": self.claim_id,
            "verdict": self.verdict,
            "parameters": _js(self.parameters),
            "checked": self.checked,
            "failures": self.failures,
            "witnesses": self.witnesses,
            "notes": list(self.notes),
        }
        if self.crosscheck is not None:
            out["crosscheck"] = self.crosscheck
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def render_text(self) -> str:
        params = ", ".join(f"{k}={v}" for k, v in _js(self.parameters).items())
        lines = [f"{self.claim_id}: {self.verdict}  ({params})",
                 f"  checked {self.checked} instances, {self.failures} failing, "
                 f"{self.elapsed_ms:.0f} ms"]
        for w in self.witnesses:
            lines.append(f"  {w['input']} -> {w['witness']}")
        if self.failures > len(self.witnesses):
            lines.append(f"  ... {self.failures - len(self.witnesses)} more failures not listed")
        if self.crosscheck is not None:
            cc = self.crosscheck
            lines.append(f"  crosscheck: {cc['sampled']} sampled on [0,{cc['window']}]^2, "
                         f"{len(cc['disagreements'])} disagreements")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)


class _Timer:
    def __init__(self, report: WitnessReport):
        self.report = report

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self.report

    def __exit__(self, *exc):
        self.report.elapsed_ms = (time.perf_counter() - self.t0) * 1000.0
        return False


class _Sampler:
    """Seeded 10% sampling of instances for the oracle cross-check."""

    def __init__(self, report: WitnessReport, enabled: bool, seed: int = 0,
                 window: int = CROSSCHECK_WINDOW):
        self.report = report
        self.enabled = enabled
        self.rng = random.Random(seed)
        self.window = window
        if enabled:
            report.crosscheck = {"window": window, "rate": CROSSCHECK_RATE,
                                 "seed": seed, "sampled": 0, "disagreements": []}

    def pick(self) -> bool:
        return self.enabled and self.rng.random() < CROSSCHECK_RATE

    def record(self, instance, agreed: bool, detail="") -> None:
        cc = self.report.crosscheck
        cc["sampled"] += 1
        if not agreed and len(cc["disagreements"]) < MAX_WITNESSES:
            cc["disagreements"].append({"input": _js(instance), "detail": _js(detail)})


def worst_verdict(verdicts) -> str:
    verdicts = list(verdicts)
    if COUNTEREXAMPLE in verdicts:
        return COUNTEREXAMPLE
    if INCONCLUSIVE in verdicts:
        return INCONCLUSIVE
    return VERIFIED


# -- helpers ------------------------------------------------------------------

def first_point(r: Region):
    """A deterministic member of a nonempty region (lexicographically first
    inside the smallest window [0, 2^k - 1]^2 that meets it)."""
    if r.is_empty():
        return None
    n = 0
    while True:
        pts = r.enumerate(n)
        if pts:
            return pts[0]
        n = 2 * n + 1


def window_product_inclusion(lhs: Region, rhs: Region, target: Region, n: int) -> tuple[bool, bool]:
    """(symbolic, brute) truth of (lhs & W)(rhs & W) <= target with W = [0, n]^2."""
    w = Region.window(n)
    symbolic = product_image(lhs & w, rhs & w) <= target
    prod = oracle.oracle_product_mask(oracle.mask_points(oracle.window_eval(lhs, n)),
                                      oracle.mask_points(oracle.window_eval(rhs, n)), 2 * n)
    brute = not (prod & ~oracle.window_eval(target, 2 * n)).any()
    return symbolic, brute


def product_counterexample(lhs: Region, rhs: Region, target: Region, start: int = 8,
                           limit: int = 256):
    """Factors x in lhs, y in rhs with x.y outside target, found by the oracle."""
    n = start
    while n <= limit:
        a_pts = lhs.enumerate(n)
        b_pts = rhs.enumerate(n)
        arrs = oracle.product_arrays(a_pts, b_pts)
        if arrs is not None:
            tmask = oracle.window_eval(target, 2 * n)
            bad = np.argwhere(~tmask[arrs[0], arrs[1]])
            if len(bad):
                ia, ib = (int(v) for v in bad[0])
                x, y = sorted(a_pts)[ia], sorted(b_pts)[ib]
                return {"left": x, "right": y, "product": oracle.oracle_mul(x, y)}
        n *= 2
    return None


def _minimal_working_m(top: str, a, b, n: int, start: int) -> int | None:
    """Least m' >= start with basic(a,m').basic(b,m') <= basic(ab, n).

    m' = n + max(coordinates of a, b) always works for tau1 and tau2: for
    s, t >= that bound every pq cancellation happens inside the tails, so
    the product stays n deep.  Scanning a little past it guards the claim.
    """
    target = basic(top, mul(a, b), n)
    for m in range(start, n + max(*a, *b) + 3):
        if product_image(basic(top, a, m), basic(top, b, m)) <= target:
            return m
    return None


def _box(max_index: int, dims: int):
    return itertools.product(range(max_index + 1), repeat=dims)


# -- joint continuity of the semigroup topologies -------------------------------

def _verify_semigroup_topology(claim_id, top, max_index, max_n, crosscheck, seed):
    report = WitnessReport(claim_id, parameters={
        "topology": top, "max_index": max_index, "max_n": max_n,
        "m_rule": "max(2n, i1, j1, i2, j2)"})
    sampler = _Sampler(report, crosscheck, seed)
    product_failures = rule_failures = 0
    with _Timer(report):
        for n in range(max_n + 1):
            for i1, j1, i2, j2 in _box(max_index, 4):
                a, b = Element(i1, j1), Element(i2, j2)
                m = max(2 * n, i1, j1, i2, j2)
                lhs, rhs = basic(top, a, m), basic(top, b, m)
                target = basic(top, mul(a, b), n)
                ok = product_image(lhs, rhs) <= target
                report.checked += 1
                if sampler.pick():
                    sym, brute = window_product_inclusion(lhs, rhs, target, sampler.window)
                    sampler.record({"a": a, "b": b, "n": n, "m": m}, sym == brute and (sym or not ok),
                                   {"symbolic": sym, "brute": brute})
                if not ok:
                    product_failures += 1
                    m_rule = n + max(i1, j1, i2, j2)
                    if not product_image(basic(top, a, m_rule), basic(top, b, m_rule)) <= target:
                        rule_failures += 1
                    inst = {"a": a, "b": b, "n": n, "m": m}
                    if len(report.witnesses) < MAX_WITNESSES:
                        report.fail(inst, {"factors": product_counterexample(lhs, rhs, target),
                                           "minimal_working_m": _minimal_working_m(top, a, b, n, m + 1)})
                    else:
                        report.fail(inst, None)
        _check_inversion(report, sampler, top, max_index, max_n)
    report.parameters["product_failures"] = product_failures
    if product_failures:
        report.notes.append(
            f"the stated m is too small in {product_failures} instances; "
            + ("m = n + max(i1, j1, i2, j2) works in all of them, so the multiplication "
               "is still jointly continuous" if not rule_failures else
               f"m = n + max(i1, j1, i2, j2) also fails in {rule_failures}"))
    return report


def _check_inversion(report, sampler, top, max_index, max_n) -> int:
    """inverse_image(basic(x, n)) == basic(x^-1, n) over the box; returns failure count."""
    before = report.failures
    for i, j in _box(max_index, 2):
        x = Element(i, j)
        for n in range(max_n + 1):
            u = basic(top, x, n)
            expected = basic(top, inv(x), n)
            report.checked += 1
            if u.inverse() != expected:
                report.fail({"inversion": x, "n": n},
                            {"inverse_image": u.inverse(), "expected": expected})
            if sampler.pick():
                cc = oracle.crosscheck("inverse_image", {"a": u}, sampler.window, expected)
                sampler.record({"inversion": x, "n": n}, cc.passed, cc.to_json())
    return report.failures - before


def verify_prop1(max_index: int = 10, max_n: int = 10, crosscheck: bool = False,
                 seed: int = 0) -> WitnessReport:
    """tau1: U_m(a).U_m(b) <= U_n(ab) with m = max(2n, coords), and U_n(x)^-1 = U_n(x^-1)."""
    return _verify_semigroup_topology("prop1", "tau1", max_index, max_n, crosscheck, seed)


def verify_prop2(max_index: int = 10, max_n: int = 10, crosscheck: bool = False,
                 seed: int = 0) -> WitnessReport:
    """tau2: the same product and inversion sweep, plus local compactness evidence.

    For every x and n in range: updown(x) - O_n(x) is finite with exactly
    min(i, j) + n points (the up-set minus x, then the first n points below
    x), and cl(O_n(x)) is the whole comparability diagonal updown(x).
    """
    report = _verify_semigroup_topology("prop2", "tau2", max_index, max_n, crosscheck, seed)
    sampler = _Sampler(WitnessReport("prop2-closure"), crosscheck, seed + 1, window=20)
    t0 = time.perf_counter()
    strictly_larger = 0
    for i, j in _box(max_index, 2):
        x = Element(i, j)
        ud = updown_set(x)
        for n in range(max_n + 1):
            o = basic("tau2", x, n)
            rest = ud - o
            report.checked += 2
            if not rest.is_finite() or rest.cardinality() != min(i, j) + n:
                report.fail({"x": x, "n": n, "check": "finite remainder"},
                            {"remainder": rest, "expected_count": min(i, j) + n})
            cl = closure("tau2", o)
            if cl != ud:
                report.fail({"x": x, "n": n, "check": "closure"}, {"closure": cl, "expected": ud})
            if cl != down_set(x):
                strictly_larger += 1
            if sampler.pick():
                cc = oracle.crosscheck("closure-membership",
                                       {"topology": "tau2", "region": o, "depth": 30},
                                       sampler.window, cl)
                sampler.record({"x": x, "n": n}, cc.passed, cc.to_json())
    report.elapsed_ms += (time.perf_counter() - t0) * 1000.0
    if report.crosscheck is not None:
        cc = sampler.report.crosscheck
        report.crosscheck["sampled"] += cc["sampled"]
        report.crosscheck["disagreements"] += cc["disagreements"]
    report.notes.append(
        f"cl(O_n(x)) equals updown(x) in every swept case; it is strictly larger than "
        f"the down-set of x in {strictly_larger} of them (those with min(i, j) > 0)")
    return report


# -- shift continuity and compactness of tau_c ------------------------------------

def verify_prop3(max_index: int = 8, covers: int = 100, crosscheck: bool = False,
                 seed: int = 0) -> WitnessReport:
    """tau_c: a.W_2m(x) <= W_m(ax) and W_2m(x).a <= W_m(xa) with m = max(coords),
    inversion, cofiniteness of basic opens, and subcover extraction on
    ``covers`` seeded random basic covers."""
    report = WitnessReport("prop3", parameters={"max_index": max_index, "m_rule": "max(i, j, k, l)",
                                                "random_covers": covers})
    sampler = _Sampler(report, crosscheck, seed)
    with _Timer(report):
        for i, j, k, l in _box(max_index, 4):
            a, x = Element(i, j), Element(k, l)
            m = max(i, j, k, l)
            w2m = basic("tauc", x, 2 * m)
            for side, img, target in (
                    ("left", left_shift_image(a, w2m), basic("tauc", mul(a, x), m)),
                    ("right", right_shift_image(w2m, a), basic("tauc", mul(x, a), m))):
                report.checked += 1
                ok = img <= target
                if not ok:
                    report.fail({"a": a, "x": x, "m": m, "side": side},
                                {"escaping_point": first_point(img - target)})
                if sampler.pick():
                    pa = Region.point(a)
                    lhs, rhs = (pa, w2m) if side == "left" else (w2m, pa)
                    sym, brute = window_product_inclusion(lhs, rhs, target, sampler.window)
                    sampler.record({"a": a, "x": x, "m": m, "side": side},
                                   sym == brute and (sym or not ok))
        _check_inversion(report, sampler, "tauc", max_index, max_index)
        for i, j in _box(max_index, 2):
            for n in range(max_index + 1):
                report.checked += 1
                w = basic("tauc", (i, j), n)
                if not w.is_cofinite():
                    report.fail({"x": (i, j), "n": n, "check": "cofinite"}, {"region": w})
        rng = random.Random(seed)
        for c in range(covers):
            cover = random_tauc_cover(rng, max_index)
            report.checked += 1
            try:
                picked = subcover_tauc(cover)
            except NotACover as e:
                report.fail({"cover": cover}, {"missed": e.witness})
                continue
            union = Region.empty()
            for idx in picked:
                union |= basic("tauc", *cover[idx])
            if union != Region.full():
                report.fail({"cover": cover}, {"subcover": picked, "missed": first_point(~union)})
            elif c < 3:
                report.witness({"cover_size": len(cover)}, {"subcover": [cover[i] for i in picked]})
    return report


# -- the comparability-diagonal product ----------------------------------------------

def exact_updown_product(a, b) -> Region:
    """updown(a).updown(b): the diagonal of (i+s, j+t) from s-coordinate
    max(0, i-j, (i-j)+(s-t)) onwards.

    With factors (i-j+u, u) and (s-t+v', v'') written via their diagonals,
    the middle word p^u q^w cancels to min(u, w); the outer q-power is
    (i-j) + max(u, w) whose minimum over the factor ranges is the bound.
    """
    d = (a[0] - a[1]) + (b[0] - b[1])
    start = max(0, a[0] - a[1], d)
    return Region.diagonal_tail((start, start - d), 0)


def verify_lemma2(max_index: int = 6, window: int = CROSSCHECK_WINDOW) -> WitnessReport:
    """updown(i,j).updown(s,t) == updown(i+s, j+t), every pair cross-checked on a window."""
    report = WitnessReport("lemma2", parameters={"max_index": max_index, "window": window})
    report.crosscheck = {"window": window, "rate": 1.0, "seed": None, "sampled": 0,
                         "disagreements": []}
    exact_ok = True
    w = Region.window(window)
    with _Timer(report):
        for i, j, s, t in _box(max_index, 4):
            a, b = Element(i, j), Element(s, t)
            ua, ub = updown_set(a), updown_set(b)
            got = product_image(ua, ub)
            claimed = updown_set((i + s, j + t))
            report.checked += 1
            if got != claimed:
                report.fail({"a": a, "b": b},
                            {"product": got, "claimed": claimed,
                             "missing": first_point(claimed - got),
                             "extra": first_point(got - claimed)})
            exact_ok &= got == exact_updown_product(a, b)
            cc = oracle.crosscheck("product_image", {"a": ua, "b": ub}, window,
                                   product_image(ua & w, ub & w))
            report.crosscheck["sampled"] += 1
            if not cc.passed:
                report.crosscheck["disagreements"].append(
                    {"input": _js({"a": a, "b": b}), "detail": cc.to_json()})
    if report.failures:
        report.notes.append(
            "the identity breaks exactly when the first factor lies below the main "
            "diagonal and the second above it; the product then starts further out")
    report.notes.append(
        "exact product diagonal-tail formula "
        + ("matches" if exact_ok else "DOES NOT match") + " every swept case")
    return report


# -- trace determinism ----------------------------------------------------------

def verify_trace_injectivity(n: int = 50) -> WitnessReport:
    """trace((m, n)) = ((m, m), (n, n)) and trace is injective on [0, n]^2.

    Only the combinatorial core is checked: an element is determined by
    x.x^-1 and x^-1.x.  The topological hypothesis that makes those maps
    continuous is not something a finite check can decide.
    """
    report = WitnessReport("lemma3_trace", parameters={"N": n})
    seen = {}
    with _Timer(report):
        for x in oracle.Window(n).points():
            tr = trace(x)
            report.checked += 1
            if tr != ((x[0], x[0]), (x[1], x[1])):
                report.fail({"x": x}, {"trace": tr})
            if tr in seen:
                report.fail({"x": x, "y": seen[tr]}, {"shared_trace": tr})
            seen[tr] = x
    report.notes.append("checks trace determinism only, not the continuity hypothesis "
                        "on x -> x.x^-1 and x -> x^-1.x")
    return report


# -- translations between down-sets ------------------------------------------------

def verify_lemma4(max_index: int = 6, depth: int = 30) -> WitnessReport:
    """x -> (i,m).x.(n,j) maps down(m,n) onto down(i,j) as (m+k, n+k) -> (i+k, j+k),
    and the reverse translation undoes it."""
    report = WitnessReport("lemma4_homeo", parameters={"max_index": max_index, "depth": depth})
    with _Timer(report):
        for i, j, m, n in _box(max_index, 4):
            for k in range(depth + 1):
                y = translate(i, j, m, n, (m + k, n + k))
                back = translate(m, n, i, j, y)
                report.checked += 1
                if y != (i + k, j + k) or back != (m + k, n + k):
                    report.fail({"i": i, "j": j, "m": m, "n": n, "k": k},
                                {"image": y, "round_trip": back})
            image = product_image(product_image(Region.point((i, m)), down_set((m, n))),
                                  Region.point((n, j)))
            report.checked += 1
            if image != down_set((i, j)):
                report.fail({"i": i, "j": j, "m": m, "n": n}, {"image_of_down_set": image})
    return report


# -- isolation propagation ----------------------------------------------------------

def thm1_propagate(isolated, target, window: int = 60) -> WitnessReport:
    """If (i,j) is isolated, every (m,n) lies in the finite set of solutions of
    (i,m).x.(n,j) = (i,j); the solver output is compared with brute force."""
    (i, j), (m, n) = isolated, target
    report = WitnessReport("thm1_propagate", parameters={"isolated": Element(i, j),
                                                         "target": Element(m, n),
                                                         "window": window})
    with _Timer(report):
        _thm1_instance(report, (i, j), (m, n), window)
    return report


def _thm1_instance(report, isolated, target, window, record=True) -> None:
    (i, j), (m, n) = isolated, target
    sols = solve_two_sided((i, m), (n, j), (i, j))
    report.checked += 1
    inst = {"isolated": isolated, "target": target}
    reach = max((max(x) for x in sols), default=0)
    if reach > window:
        report.fail(inst, {"solutions": sols, "problem": "solutions leave the window"})
        return
    brute = oracle.brute_solve_two_sided_fast((i, m), (n, j), (i, j), window)
    if target not in sols:
        report.fail(inst, {"solutions": sols, "problem": "target missing"})
    elif {tuple(x) for x in sols} != brute:
        report.fail(inst, {"solutions": sols, "brute_force": brute})
    elif record:
        report.witness(inst, {"solutions": sols, "count": len(sols)})


def thm1_sweep(max_index: int = 6, window: int = 60) -> WitnessReport:
    """thm1_propagate for every isolated/target pair in [0, max_index]^2."""
    report = WitnessReport("thm1_propagate", parameters={"max_index": max_index, "window": window})
    sizes = []
    with _Timer(report):
        for i, j, m, n in _box(max_index, 4):
            _thm1_instance(report, (i, j), (m, n), window, record=False)
            sizes.append(len(solve_two_sided((i, m), (n, j), (i, j))))
    report.notes.append(f"largest solution set: {max(sizes)} elements")
    return report


# -- isolated points ---------------------------------------------------------------

def verify_isolated_points(max_index: int = 10) -> WitnessReport:
    """No point of [0, max_index]^2 is isolated in tau1, tau2 or tau_c; every point
    is isolated in the discrete base."""
    report = WitnessReport("isolated_points", parameters={"max_index": max_index})
    with _Timer(report):
        for name in TOPOLOGIES:
            expected = name == "discrete"
            for x in oracle.Window(max_index).points():
                report.checked += 1
                if is_isolated(name, x) != expected:
                    report.fail({"topology": name, "x": x}, {"isolated": not expected})
    report.notes.append(
        "decides only the isolated-point condition: a countable T1 space with no "
        "isolated point is not a Baire space, but Baire-ness itself is not computed here")
    return report


# -- continuity of inversion ---------------------------------------------------------

def verify_inv_continuity(max_index: int = 8, max_n: int = 8) -> WitnessReport:
    """basic(x, n)^-1 == basic(x^-1, n) in all four topologies, so inversion is a homeomorphism."""
    report = WitnessReport("inv_continuity", parameters={"max_index": max_index, "max_n": max_n})
    sampler = _Sampler(report, False)
    with _Timer(report):
        for name in TOPOLOGIES:
            _check_inversion(report, sampler, name, max_index, max_n)
    return report


# -- quasi-regularity and semiregularity ------------------------------------------------

def _subspace(kind: str, x) -> Region:
    if kind in ("down", "down_set"):
        return down_set(x)
    if kind == "idempotents":
        if x[0] != x[1]:
            raise ValueError(f"{Element(*x)} is not an idempotent")
        return idempotents()
    raise ValueError(f"unknown subspace kind {kind!r}; expected 'down' or 'idempotents'")


def quasireg_fail(top, kind: str, x, depth: int = 8) -> WitnessReport:
    """Witness that the subspace Y (down-set of x, or the idempotents) is not
    quasi-regular at x.

    U = basic(x, n0) & Y with the least n0 making U a proper subset of Y.  Every
    nonempty relative open V contains a trace basic(y, k) & Y, and the relative
    closure of that trace is all of Y, so cl_Y(V) = Y is never inside U.  The
    traces for y among the first ``depth`` points of Y and k <= depth are swept
    as cross-validation.  In the discrete base V = {x} is closed and inside U,
    so the report is a counterexample to the failure claim.
    """
    name = get_topology(top).name
    x = Element(*x)
    y_space = _subspace(kind, x)
    report = WitnessReport("quasireg_fail", parameters={"topology": name, "subspace": kind,
                                                        "x": x, "depth": depth})
    with _Timer(report):
        n0 = next((n for n in range(depth + max(x) + 3)
                   if basic(name, x, n) & y_space != y_space), None)
        if n0 is None:
            report.verdict = INCONCLUSIVE
            report.notes.append("no basic neighbourhood of x is a proper subset of Y")
            return report
        u = basic(name, x, n0) & y_space
        report.parameters["n0"] = n0
        pts = y_space.enumerate(max(x) + depth)[:depth]
        for y in pts:
            for k in range(depth + 1):
                v = basic(name, y, k) & y_space
                cl = subspace_closure(name, y_space, v)
                report.checked += 1
                if cl <= u:
                    report.fail({"y": y, "k": k}, {"V": v, "closure_in_Y": cl, "U": u})
                    report.parameters["quasi_regular"] = True
                    return report
        report.parameters["quasi_regular"] = False
        report.witness({"U": u}, {"missing_from_U": first_point(y_space - u),
                                  "closure_of_every_V": "Y"})
    return report


def semireg_fail(top, x, max_n: int = 10) -> WitnessReport:
    """Witness that x has no base of regular open neighbourhoods.

    Per n the report lists whether basic(x, n) is regular open and its
    int(cl(.)).  The verdict is verified when some n0 has int(cl(basic(x, m)))
    outside basic(x, n0) for every m <= max_n: a regular open V around x
    contains some basic(x, m), so V = int(cl(V)) contains int(cl(basic(x, m)))
    and cannot fit in basic(x, n0).  The flag ``all_basic_nonregular`` records
    the stronger pointwise statement, which can fail at n = 0 where a basic
    set may be all of omega^2 or a whole diagonal.
    """
    name = get_topology(top).name
    x = Element(*x)
    report = WitnessReport("semireg_fail", parameters={"topology": name, "x": x, "max_n": max_n})
    with _Timer(report):
        int_cls = []
        for n in range(max_n + 1):
            u = basic(name, x, n)
            icl = interior(name, closure(name, u))
            int_cls.append(icl)
            report.checked += 1
            report.witness({"n": n}, {"regular_open": icl == u, "int_cl": icl})
        report.parameters["all_basic_nonregular"] = all(
            icl != basic(name, x, n) for n, icl in enumerate(int_cls))
        n0 = next((n for n in range(max_n + 1)
                   if all(not icl <= basic(name, x, n) for icl in int_cls[n:])), None)
        report.parameters["n0"] = n0
        if n0 is None:
            report.verdict = COUNTEREXAMPLE
            report.failures = 1
            report.notes.append("x has regular open basic neighbourhoods arbitrarily deep")
    return report


def quasireg_sweep(max_index: int = 4, depth: int = 6) -> WitnessReport:
    """quasireg_fail over points <= max_index, both subspace kinds, all topologies.

    Verified when every non-discrete case yields a failure witness and every
    discrete case is quasi-regular.
    """
    report = WitnessReport("quasireg_fail", parameters={"max_index": max_index, "depth": depth})
    with _Timer(report):
        for name in TOPOLOGIES:
            for i, j in _box(max_index, 2):
                for kind in ("down", "idempotents"):
                    if kind == "idempotents" and i != j:
                        continue
                    r = quasireg_fail(name, kind, (i, j), depth)
                    report.checked += 1
                    wanted = COUNTEREXAMPLE if name == "discrete" else VERIFIED
                    if r.verdict != wanted:
                        report.fail({"topology": name, "subspace": kind, "x": (i, j)},
                                    {"verdict": r.verdict})
    return report


def semireg_sweep(max_index: int = 4, max_n: int = 10) -> WitnessReport:
    """semireg_fail over points <= max_index in all topologies (discrete must pass)."""
    report = WitnessReport("semireg_fail", parameters={"max_index": max_index, "max_n": max_n})
    regular_basics = []
    with _Timer(report):
        for name in TOPOLOGIES:
            for i, j in _box(max_index, 2):
                r = semireg_fail(name, (i, j), max_n)
                report.checked += 1
                wanted = COUNTEREXAMPLE if name == "discrete" else VERIFIED
                if r.verdict != wanted:
                    report.fail({"topology": name, "x": (i, j)}, {"verdict": r.verdict})
                if name != "discrete" and not r.parameters["all_basic_nonregular"]:
                    regular_basics.append((name, (i, j)))
    if regular_basics:
        report.notes.append(
            f"{len(regular_basics)} non-discrete cases have a regular open basic set "
            f"(at n = 0), e.g. {regular_basics[0]}; deeper basic sets never are")
    return report


# -- compactness -----------------------------------------------------------------------

class NotACover(ValueError):
    def __init__(self, witness, msg: str = "the given sets do not cover the space"):
        super().__init__(f"{msg}; missed point {Element(*witness)}")
        self.witness = Element(*witness)


def _check_cover(space: Region, members: list[Region]) -> None:
    union = Region.empty()
    for r in members:
        union |= r
    missed = space - union
    if not missed.is_empty():
        raise NotACover(first_point(missed))


def _pointwise_subcover(space: Region, members: list[Region]) -> list[int]:
    """One member with the smallest finite remainder, then one member per leftover point."""
    best = min(range(len(members)),
               key=lambda i: ((space - members[i]).cardinality(), i))
    rest = space - members[best]
    if not rest.is_finite():
        raise ValueError("no single member leaves a finite remainder")
    picked = [best]
    for y in rest.enumerate(int(rest.max_coordinate())) if not rest.is_empty() else []:
        if any(y in members[p] for p in picked):
            continue
        picked.append(next(i for i, r in enumerate(members) if y in r))
    return picked


def subcover_tauc(cover) -> list[int]:
    """Indices of a finite subcover of a cover of omega^2 by tau_c basic opens (x, n)."""
    members = [basic("tauc", x, n) for x, n in cover]
    if not members:
        raise NotACover((0, 0), "empty cover")
    full = Region.full()
    _check_cover(full, members)
    return _pointwise_subcover(full, members)


def subcover_updown(x, cover) -> list[int]:
    """Indices of a finite subcover of updown(x) from tau2 basic opens (y, n)."""
    space = updown_set(x)
    traces = [basic("tau2", y, n) & space for y, n in cover]
    if not traces:
        raise NotACover(x, "empty cover")
    _check_cover(space, traces)
    return _pointwise_subcover(space, traces)


def random_tauc_cover(rng: random.Random, bound: int) -> list[tuple[Element, int]]:
    """A few random W_n(x), topped up with one member per point they miss."""
    cover = [(Element(rng.randint(0, bound), rng.randint(0, bound)), rng.randint(0, bound))
             for _ in range(rng.randint(1, 4))]
    union = Region.empty()
    for x, n in cover:
        union |= basic("tauc", x, n)
    missed = ~union
    for y in missed.enumerate(int(missed.max_coordinate())) if not missed.is_empty() else []:
        cover.append((y, rng.randint(0, bound)))
    rng.shuffle(cover)
    return cover


def random_updown_cover(rng: random.Random, x, bound: int) -> list[tuple[Element, int]]:
    """A cover of updown(x) by tau2 basic opens centred on its points (plus some noise)."""
    x = Element(*x)
    i, j = x
    d = i - j
    base = max(0, d), max(0, -d)
    k0 = rng.randint(0, bound)
    anchor = Element(base[0] + k0, base[1] + k0)
    cover = [(anchor, rng.randint(0, bound))]
    cover += [(Element(rng.randint(0, bound), rng.randint(0, bound)), rng.randint(0, bound))
              for _ in range(rng.randint(0, 3))]
    space = updown_set(x)
    covered = Region.empty()
    for y, n in cover:
        covered |= basic("tau2", y, n)
    missed = space - covered
    for y in missed.enumerate(int(missed.max_coordinate())) if not missed.is_empty() else []:
        cover.append((y, rng.randint(0, bound)))
    rng.shuffle(cover)
    return cover


def verify_subcover_tauc(covers: int = 100, bound: int = 8, seed: int = 0) -> WitnessReport:
    report = WitnessReport("subcover_tauc", parameters={"covers": covers, "bound": bound,
                                                        "seed": seed})
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(covers):
            cover = random_tauc_cover(rng, bound)
            _check_subcover(report, Region.full(), [basic("tauc", y, n) for y, n in cover],
                            cover, lambda: subcover_tauc(cover))
    return report


def verify_subcover_updown(covers: int = 100, bound: int = 8, seed: int = 0) -> WitnessReport:
    report = WitnessReport("subcover_updown", parameters={"covers": covers, "bound": bound,
                                                          "seed": seed})
    rng = random.Random(seed)
    with _Timer(report):
        for _ in range(covers):
            x = Element(rng.randint(0, bound), rng.randint(0, bound))
            cover = random_updown_cover(rng, x, bound)
            space = updown_set(x)
            _check_subcover(report, space, [basic("tau2", y, n) & space for y, n in cover],
                            {"x": x, "cover": cover}, lambda: subcover_updown(x, cover))
    return report


def _check_subcover(report, space, members, instance, extract) -> None:
    report.checked += 1
    try:
        picked = extract()
    except NotACover as e:
        report.fail(instance, {"missed": e.witness})
        return
    union = Region.empty()
    for p in picked:
        union |= members[p]
    if not space <= union:
        report.fail(instance, {"subcover": picked, "missed": first_point(space - union)})
    elif len(report.witnesses) < 3:
        report.witness(instance, {"subcover": picked})


# -- continuity searches ---------------------------------------------------------------

def continuity_witness(top, a, x, n: int, side: str = "left", budget: int = 64) -> int | None:
    """Least k <= budget with a.basic(x, k) <= basic(ax, n) (mirrored for side="right")."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    name = get_topology(top).name
    target = basic(name, mul(a, x) if side == "left" else mul(x, a), n)
    for k in range(budget + 1):
        u = basic(name, x, k)
        img = left_shift_image(a, u) if side == "left" else right_shift_image(u, a)
        if img <= target:
            return k
    return None


def stabilization_bound(top, a, b, n: int) -> int:
    """k beyond which basic(a,k).basic(b,k) <= basic(ab,n) cannot start to hold.

    tau1, tau2: the inclusion holds at k = n + max coordinates, so the least
    working k is at most that.  tau_c: the tails omega^2 - C_k multiply to all
    of omega^2 for every k ((u, K).(K, v) = (u, v) with K > k), so the product
    is the same full set at each k and k = 0 decides; the bound is set to
    the tau1 one anyway so a few extra k are confirmed.  discrete: k = 0.
    """
    name = get_topology(top).name
    if name == "discrete":
        return 0
    return n + max(*a, *b)


def joint_continuity_search(top, bound: int = 4, max_n: int | None = None,
                            budget: int | None = None) -> WitnessReport:
    """Search (a, b, n) with coordinates <= bound for a point where joint
    continuity fails: no k up to the stabilization bound gives
    basic(a,k).basic(b,k) <= basic(ab,n).  A failure is a counterexample;
    running out of ``budget`` before the bound leaves the search inconclusive."""
    name = get_topology(top).name
    max_n = bound if max_n is None else max_n
    report = WitnessReport("joint_continuity_search",
                           parameters={"topology": name, "bound": bound, "max_n": max_n,
                                       "budget": budget})
    minimal = {}
    inconclusive = 0
    with _Timer(report):
        for n in range(max_n + 1):
            for i1, j1, i2, j2 in _box(bound, 4):
                a, b = Element(i1, j1), Element(i2, j2)
                stab = stabilization_bound(name, a, b, n)
                limit = stab if budget is None else min(stab, budget)
                target = basic(name, mul(a, b), n)
                report.checked += 1
                found = next((k for k in range(limit + 1)
                              if product_image(basic(name, a, k), basic(name, b, k)) <= target),
                             None)
                if found is not None:
                    minimal[(a, b, n)] = found
                elif limit < stab:
                    inconclusive += 1
                else:
                    u, v = basic(name, a, stab), basic(name, b, stab)
                    report.fail({"a": a, "b": b, "n": n},
                                {"k_checked_up_to": stab,
                                 "factors": product_counterexample(u, v, target)})
    if inconclusive and report.verdict == VERIFIED:
        report.verdict = INCONCLUSIVE
    report.parameters["inconclusive_instances"] = inconclusive
    if minimal:
        report.parameters["max_minimal_k"] = max(minimal.values())
    if name == "tauc" and report.failures:
        report.notes.append("tails of tau_c multiply to all of omega^2, so no k works "
                            "whenever the target basic set is not the whole space")
    return report


# -- dispatch -----------------------------------------------------------------------------

def _verify_all_claims(k: int, crosscheck: bool) -> list[WitnessReport]:
    return [r for name in CLAIMS if name != "all" for r in run_claim(name, k, crosscheck)]


def _joint_cont(k, crosscheck):
    return [joint_continuity_search(t, bound=max(1, k // 2)) for t in ("tau1", "tau2")]


CLAIMS = {
    "prop1": lambda k, cc: [verify_prop1(k, k, crosscheck=cc)],
    "prop2": lambda k, cc: [verify_prop2(k, k, crosscheck=cc)],
    "prop3": lambda k, cc: [verify_prop3(k, crosscheck=cc)],
    "lemma2": lambda k, cc: [verify_lemma2(min(k, 6))],
    "lemma3": lambda k, cc: [verify_trace_injectivity(5 * k + 10)],
    "lemma4": lambda k, cc: [verify_lemma4(min(k, 6), 4 * k)],
    "thm1": lambda k, cc: [thm1_sweep(min(k, 6))],
    "isolated": lambda k, cc: [verify_isolated_points(k)],
    "inv-cont": lambda k, cc: [verify_inv_continuity(k, k)],
    "quasireg": lambda k, cc: [quasireg_sweep(min(k, 4))],
    "semireg": lambda k, cc: [semireg_sweep(min(k, 4), k)],
    "subcover-tauc": lambda k, cc: [verify_subcover_tauc(100, k)],
    "subcover-updown": lambda k, cc: [verify_subcover_updown(100, k)],
    "joint-cont": _joint_cont,
    "all": _verify_all_claims,
}


def run_claim(name: str, k: int = 8, crosscheck: bool = False) -> list[WitnessReport]:
    """Reports for one CLI claim name (``all`` runs every claim)."""
    if name not in CLAIMS:
        raise ValueError(f"unknown claim {name!r}; expected one of {', '.join(CLAIMS)}")
    return CLAIMS[name](k, crosscheck)
