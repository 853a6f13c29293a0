"""Command-line front end.

    bicyclic mul "q^2 p^3" "q^5 p"
    bicyclic nbhd --topology tau2 --point "q" --n 2 --window 8 --format grid
    bicyclic verify prop3 --max 8

Exit codes: 0 success / verified, 1 counterexample found, 2 usage or parse
error, 3 inconclusive search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import oracle, order, topology, verify
from .core import (ParseError, format_element, inv, mul, parse_element, solve_left,
                   solve_right, solve_two_sided, trace)
from .region import Region

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
DEFAULT_MAX = 8
DEFAULT_WINDOW = 40
MEMBER, OTHER = "#", "·"


class UsageError(Exception):
    pass


# -- argument parsing helpers --------------------------------------------------

def split_top_level(text: str) -> list[str]:
    """Split on commas outside parentheses: "(1,2),3" -> ["(1,2)", "3"]."""
    parts, depth, start = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:k])
            start = k + 1
    parts.append(text[start:])
    return parts


def element_arg(text: str):
    try:
        return parse_element(text)
    except ParseError as e:
        raise UsageError(f"bad element: {e}") from None


def basic_arg(text: str):
    """"A,N" -> (element, n)"""
    parts = split_top_level(text)
    if len(parts) != 2:
        raise UsageError(f"--basic expects ELEMENT,N, got {text!r}")
    x = element_arg(parts[0])
    try:
        n = int(parts[1])
    except ValueError:
        raise UsageError(f"bad neighbourhood index {parts[1]!r} at position "
                         f"{len(parts[0]) + 1} of {text!r}") from None
    if n < 0:
        raise UsageError("neighbourhood index must be non-negative")
    return x, n


def load_region(path: str) -> Region:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as e:
        raise UsageError(f"cannot read region file: {e}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON at line {e.lineno} column {e.colno} "
                         f"(position {e.pos}): {e.msg}") from None
    try:
        return Region.from_json(obj)
    except (ValueError, TypeError, KeyError) as e:
        raise UsageError(f"{path}: {e}") from None


def region_from_args(args) -> Region:
    if args.region and args.basic:
        raise UsageError("give either --region or --basic, not both")
    if args.region:
        return load_region(args.region)
    if args.basic:
        x, n = basic_arg(args.basic)
        return topology.basic(args.topology, x, n)
    raise UsageError("one of --region FILE or --basic A,N is required")


# -- output ---------------------------------------------------------------------

def element_json(x) -> dict:
    return {"i": int(x[0]), "j": int(x[1])}


def render_grid(r: Region, n: int) -> str:
    """Rows i = 0..n downward, columns j = 0..n rightward."""
    mask = r.window_mask(n)
    return "\n".join("".join(MEMBER if v else OTHER for v in row) for row in mask)


def emit_region(r: Region, fmt: str, window: int, out, label: str | None = None) -> None:
    if fmt == "grid":
        if label:
            print(f"{label}:", file=out)
        print(render_grid(r, window), file=out)
        return
    members = r.enumerate(window)
    if fmt == "json":
        obj = {"region": r.to_json(), "window": window,
               "members": [[int(s), int(t)] for s, t in members]}
        print(json.dumps(obj if label is None else {label: obj}), file=out)
        return
    if label:
        print(f"{label}:", file=out)
    if not r.cells:
        print("  (empty)", file=out)
    for c in r.cells:
        print(f"  {c!r}", file=out)
    shown = ", ".join(f"({s},{t})" for s, t in members[:40])
    more = f", ... ({len(members)} total)" if len(members) > 40 else ""
    print(f"  in [0,{window}]^2: {shown}{more}", file=out)


def emit_value(fmt: str, text: str, obj, out) -> None:
    print(json.dumps(obj) if fmt == "json" else text, file=out)


# -- subcommands -----------------------------------------------------------------

def cmd_mul(args, out):
    r = mul(element_arg(args.a), element_arg(args.b))
    emit_value(args.format, format_element(r), element_json(r), out)
    return EXIT_OK


def cmd_inv(args, out):
    r = inv(element_arg(args.a))
    emit_value(args.format, format_element(r), element_json(r), out)
    return EXIT_OK


def cmd_trace(args, out):
    left, right = trace(element_arg(args.a))
    emit_value(args.format, f"{format_element(left)}, {format_element(right)}",
               {"left": element_json(left), "right": element_json(right)}, out)
    return EXIT_OK


def cmd_leq(args, out):
    r = order.leq(element_arg(args.a), element_arg(args.b))
    emit_value(args.format, "true" if r else "false", {"leq": r}, out)
    return EXIT_OK


def cmd_order_sets(args, out):
    x = element_arg(args.a)
    sets = {"up": order.up_set(x), "down": order.down_set(x), "updown": order.updown_set(x)}
    if args.format == "json":
        print(json.dumps({name: {"region": r.to_json(), "window": args.window,
                                 "members": [list(p) for p in r.enumerate(args.window)]}
                          for name, r in sets.items()}), file=out)
        return EXIT_OK
    for name, r in sets.items():
        emit_region(r, args.format, args.window, out, label=name)
    return EXIT_OK


def cmd_nbhd(args, out):
    if args.n < 0:
        raise UsageError("--n must be non-negative")
    r = topology.basic(args.topology, element_arg(args.point), args.n)
    emit_region(r, args.format, args.window, out)
    return EXIT_OK


def cmd_closure(args, out):
    emit_region(topology.closure(args.topology, region_from_args(args)),
                args.format, args.window, out)
    return EXIT_OK


def cmd_interior(args, out):
    emit_region(topology.interior(args.topology, region_from_args(args)),
                args.format, args.window, out)
    return EXIT_OK


def cmd_regular_open(args, out):
    r = region_from_args(args)
    icl = topology.interior(args.topology, topology.closure(args.topology, r))
    ok = icl == r
    if args.format == "json":
        print(json.dumps({"regular_open": ok, "int_cl": icl.to_json()}), file=out)
    else:
        print("true" if ok else "false", file=out)
        if args.format == "grid":
            emit_region(icl, "grid", args.window, out, label="int(cl(R))")
    return EXIT_OK


def cmd_solve(args, out):
    given = [x is not None for x in (args.left, args.right, args.two_sided)]
    if sum(given) != 1:
        raise UsageError("solve needs exactly one of --left, --right, --two-sided")
    b = element_arg(args.rhs)
    if args.left is not None:
        a = element_arg(args.left)
        sols, op, inputs = solve_left(a, b), "solve_left", {"a": a, "b": b}
        eq = f"{format_element(a)} . x = {format_element(b)}"
    elif args.right is not None:
        c = element_arg(args.right)
        sols, op, inputs = solve_right(c, b), "solve_right", {"c": c, "d": b}
        eq = f"x . {format_element(c)} = {format_element(b)}"
    else:
        parts = split_top_level(args.two_sided)
        if len(parts) != 2:
            raise UsageError(f"--two-sided expects A,C, got {args.two_sided!r}")
        a, c = element_arg(parts[0]), element_arg(parts[1])
        sols, op, inputs = solve_two_sided(a, c, b), "solve_two_sided", {"a": a, "c": c, "b": b}
        eq = f"{format_element(a)} . x . {format_element(c)} = {format_element(b)}"
    sols = sorted(sols)
    check = oracle.crosscheck(op, inputs, args.window, sols) if args.window is not None else None
    if args.format == "json":
        obj = {"equation": eq, "solutions": [element_json(x) for x in sols]}
        if check is not None:
            obj["crosscheck"] = check.to_json()
        print(json.dumps(obj), file=out)
    elif args.format == "grid":
        emit_region(Region.points(sols), "grid", args.window or DEFAULT_WINDOW, out)
    else:
        print(f"{eq}: {len(sols)} solution(s)", file=out)
        for x in sols:
            print(f"  {format_element(x)}  ({x[0]},{x[1]})", file=out)
        if check is not None:
            print(f"  brute force on [0,{args.window}]^2: "
                  f"{'agrees' if check.passed else 'DISAGREES at ' + str(check.first_difference)}",
                  file=out)
    if check is not None and not check.passed:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK


_EXIT_FOR = {verify.VERIFIED: EXIT_OK, verify.COUNTEREXAMPLE: EXIT_COUNTEREXAMPLE,
             verify.INCONCLUSIVE: EXIT_INCONCLUSIVE}


def cmd_verify(args, out):
    k = args.max
    if k is None:
        env = os.environ.get("BCT_MAX_BOUND")
        try:
            k = int(env) if env else DEFAULT_MAX
        except ValueError:
            raise UsageError(f"BCT_MAX_BOUND must be an integer, got {env!r}") from None
    if k < 0:
        raise UsageError("--max must be non-negative")
    reports = verify.run_claim(args.claim, k, args.crosscheck)
    if args.format == "json":
        obj = [r.to_json() for r in reports]
        print(json.dumps(obj[0] if len(obj) == 1 else obj, indent=2), file=out)
    else:
        print("\n\n".join(r.render_text() for r in reports), file=out)
    disagreements = sum(len(r.crosscheck["disagreements"]) for r in reports if r.crosscheck)
    if disagreements:
        print(f"oracle disagreed with the symbolic engine {disagreements} time(s)", file=sys.stderr)
        return EXIT_COUNTEREXAMPLE
    return _EXIT_FOR[verify.worst_verdict(r.verdict for r in reports)]


def cmd_render(args, out):
    emit_region(load_region(args.region), args.format, args.window, out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json", "grid"), default="text")
    win = argparse.ArgumentParser(add_help=False)
    win.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                     help="window [0,W]^2 for member lists and grids (default %(default)s)")
    top = argparse.ArgumentParser(add_help=False)
    top.add_argument("--topology", required=True, choices=sorted(topology.TOPOLOGIES))
    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--region", metavar="FILE", help="region JSON file")
    src.add_argument("--basic", metavar="A,N", help="the basic open set basic(T, A, N)")

    p = argparse.ArgumentParser(prog="bicyclic",
                                description="Exact computations in the bicyclic monoid and its topologies.")
    sub = p.add_subparsers(dest="command", required=True)

    for name, nargs, helptext in (("mul", 2, "product A.B"), ("leq", 2, "natural order A <= B"),
                                  ("inv", 1, "inverse"), ("trace", 1, "(x x^-1, x^-1 x)")):
        sp = sub.add_parser(name, parents=[fmt], help=helptext)
        sp.add_argument("a", metavar="A")
        if nargs == 2:
            sp.add_argument("b", metavar="B")
    sp = sub.add_parser("order-sets", parents=[fmt, win], help="up-, down- and comparability sets")
    sp.add_argument("a", metavar="A")

    sp = sub.add_parser("nbhd", parents=[fmt, win, top], help="basic neighbourhood")
    sp.add_argument("--point", required=True)
    sp.add_argument("--n", type=int, required=True)

    for name in ("closure", "interior"):
        sub.add_parser(name, parents=[fmt, win, top, src], help=f"{name} of a region")
    sub.add_parser("regular-open", parents=[fmt, win, top, src],
                   help="is R = int(cl(R))?")

    sp = sub.add_parser("solve", parents=[fmt], help="solve a.x = b, x.c = d or a.x.c = b")
    sp.add_argument("--left", metavar="A")
    sp.add_argument("--right", metavar="C")
    sp.add_argument("--two-sided", metavar="A,C")
    sp.add_argument("--rhs", required=True)
    sp.add_argument("--window", type=int, default=None,
                    help="also compare with brute force on [0,W]^2")

    sp = sub.add_parser("verify", parents=[fmt], help="run a claim verifier")
    sp.add_argument("claim", choices=list(verify.CLAIMS))
    sp.add_argument("--max", type=int, default=None,
                    help=f"sweep bound (default $BCT_MAX_BOUND or {DEFAULT_MAX})")
    sp.add_argument("--crosscheck", action="store_true",
                    help="repeat a 10%% sample of checks with the brute-force oracle")

    sp = sub.add_parser("render", parents=[win], help="draw a region file")
    sp.add_argument("--region", required=True, metavar="FILE")
    sp.add_argument("--format", choices=("text", "json", "grid"), default="grid")
    return p


COMMANDS = {
    "mul": cmd_mul, "inv": cmd_inv, "trace": cmd_trace, "leq": cmd_leq,
    "order-sets": cmd_order_sets, "nbhd": cmd_nbhd, "closure": cmd_closure,
    "interior": cmd_interior, "regular-open": cmd_regular_open, "solve": cmd_solve,
    "verify": cmd_verify, "render": cmd_render,
}


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    window = getattr(args, "window", None)
    if window is not None and window < 0:
        print("error: --window must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
