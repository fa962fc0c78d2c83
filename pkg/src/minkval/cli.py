"""Command-line front end.

All numeric output is exact rational text except `sample`, which emits
decimal for external plotting and says so in its header.  Exit codes:
0 success, 1 verification failure, 2 malformed input or usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from itertools import product

from .bodyio import (
    FormatError,
    build_op,
    dirs_from_json,
    format_rational,
    load_polytope,
    op_to_json,
    parse_inline_direction,
    polytope_to_json,
    save_json,
)
from .cplx import DualPolytope
from .harness import CHECKS, homogeneous_decomposition, run_suite
from .mixed import mixed_volume
from .valuations import SupportEvaluator, apply_valuation

KIND_CHOICES = "proj, diff, d_m, pi_n, dtilde_m, z_combined, cov_of:<kind>"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="minkval",
        description="Exact convex geometry: polytopes, mixed volumes, Minkowski valuations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hull", help="canonicalize a vertex list into a minimal polytope")
    p.add_argument("input", help="polytope JSON file (vertices may be redundant)")

    p = sub.add_parser("volume", help="exact volume of a body")
    p.add_argument("input")

    p = sub.add_parser("support", help="exact support value in one direction")
    p.add_argument("input")
    p.add_argument("--dir", required=True, help='direction as "a,b,c,d" rationals')

    p = sub.add_parser("mixed", help="exact mixed volume of four bodies")
    p.add_argument("bodies", nargs=4, metavar="K")

    p = sub.add_parser("op", help=f"apply a valuation operator ({KIND_CHOICES})")
    p.add_argument("kind")
    p.add_argument("--body", required=True)
    p.add_argument("--M", dest="m_file")
    p.add_argument("--N", dest="n_file")
    p.add_argument("--out", help="write the output body as canonical JSON")
    p.add_argument("--dir", help="print the exact support value in this direction")

    p = sub.add_parser("decompose", help="homogeneity coefficients per direction")
    p.add_argument("kind")
    p.add_argument("--body", required=True)
    p.add_argument("--dirs", required=True, help="JSON file with an array of directions")
    p.add_argument("--M", dest="m_file")
    p.add_argument("--N", dest="n_file")

    p = sub.add_parser("verify", help="run the property-verification suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--only", help=f"run one check: {', '.join(sorted(CHECKS))}")

    p = sub.add_parser("sample", help="CSV of support values on a sphere grid (lossy)")
    p.add_argument("kind")
    p.add_argument("--body", required=True)
    p.add_argument("--sphere-grid", type=int, required=True, metavar="G")
    p.add_argument("--csv", required=True)
    p.add_argument("--M", dest="m_file")
    p.add_argument("--N", dest="n_file")

    return parser


def _load_op(args):
    M = load_polytope(args.m_file) if args.m_file else None
    N = load_polytope(args.n_file) if args.n_file else None
    return build_op(args.kind, M, N)


def _sphere_grid(g: int) -> list[tuple]:
    """Primitive integer directions on the boundary of the cube [-G, G]^4."""
    from .linalg import primitive

    if g < 1:
        raise FormatError("--sphere-grid must be at least 1")
    seen = set()
    out = []
    for d in product(range(-g, g + 1), repeat=4):
        if max(abs(x) for x in d) != g:
            continue
        p = primitive(d)
        if p not in seen:
            seen.add(p)
            out.append(p)
    out.sort()
    return out


def _cmd_hull(args) -> int:
    P = load_polytope(args.input)
    print(json.dumps(polytope_to_json(P), sort_keys=True))
    return 0


def _cmd_volume(args) -> int:
    print(format_rational(load_polytope(args.input).volume()))
    return 0


def _cmd_support(args) -> int:
    P = load_polytope(args.input)
    xi = parse_inline_direction(args.dir, P.ambient_dim)
    print(format_rational(P.support(xi)))
    return 0


def _cmd_mixed(args) -> int:
    bodies = []
    for f in args.bodies:
        K = load_polytope(f)
        if K.ambient_dim != 4:
            raise FormatError(f"{f}: field ambient_dim is {K.ambient_dim}, mixed volume needs 4")
        bodies.append(K)
    print(format_rational(mixed_volume(*bodies)))
    return 0


def _load_source_body(args):
    K = load_polytope(args.body)
    if K.ambient_dim != 4:
        raise FormatError(f"{args.body}: field ambient_dim is {K.ambient_dim}, operators need 4")
    return K


def _cmd_op(args) -> int:
    if not args.out and not args.dir:
        raise FormatError("op needs --out and/or --dir")
    op = _load_op(args)
    K = _load_source_body(args)
    if args.dir:
        w = parse_inline_direction(args.dir, 4)
        print(format_rational(SupportEvaluator(op, K).at(w)))
    if args.out:
        out = apply_valuation(op, K)
        space = "W_dual" if isinstance(out, DualPolytope) else "W"
        payload = polytope_to_json(out, space=space)
        payload["operator"] = op_to_json(op)["op"]
        save_json(args.out, payload)
    return 0


def _cmd_decompose(args) -> int:
    op = _load_op(args)
    K = _load_source_body(args)
    try:
        with open(args.dirs) as fh:
            dirs = dirs_from_json(json.load(fh))
    except OSError as e:
        raise FormatError(f"cannot read {args.dirs}: {e}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"{args.dirs} is not valid JSON: {e}") from None
    table = homogeneous_decomposition(op, K, dirs)
    payload = {
        "op": table.op_kind,
        "dirs": [[format_rational(Fraction(x)) for x in d] for d in table.dirs],
        "coefficients": [
            [format_rational(c) for c in row] for row in table.coefficients
        ],
    }
    print(json.dumps(payload, sort_keys=True))
    return 0


def _cmd_verify(args) -> int:
    if args.trials < 0:
        raise FormatError("--trials must be nonnegative")
    if args.only is not None and args.only not in CHECKS:
        raise FormatError(f"unknown check {args.only!r}; known: {', '.join(sorted(CHECKS))}")
    reports = run_suite(seed=args.seed, trials=args.trials, only=args.only)
    for rep in reports:
        print(rep.to_json())
    return 0 if all(r.passed for r in reports) else 1


def _cmd_sample(args) -> int:
    op = _load_op(args)
    K = _load_source_body(args)
    ev = SupportEvaluator(op, K)
    rows = []
    for d in _sphere_grid(args.sphere_grid):
        norm = math.sqrt(sum(x * x for x in d))
        h = ev.at(d)
        rows.append([x / norm for x in d] + [float(h) / norm])
    with open(args.csv, "w") as fh:
        fh.write("# lossy decimal output (IEEE double, 17 significant digits);"
                 " all other commands are exact\n")
        fh.write("w1,w2,w3,w4,h\n")
        for row in rows:
            fh.write(",".join(repr(x) for x in row) + "\n")
    return 0


_COMMANDS = {
    "hull": _cmd_hull,
    "volume": _cmd_volume,
    "support": _cmd_support,
    "mixed": _cmd_mixed,
    "op": _cmd_op,
    "decompose": _cmd_decompose,
    "verify": _cmd_verify,
    "sample": _cmd_sample,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _COMMANDS[args.command](args)
    except (FormatError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
