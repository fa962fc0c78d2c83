"""JSON wire formats: bodies, complex matrices, operator specs, directions.

Rationals travel as decimal-integer or "p/q" strings; decimal-point input is
rejected so nothing rounds at the boundary.  Emitted polytope JSON is
canonical: vertices sorted lexicographically, rationals reduced.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .cplx import ComplexMatrix2, Cplx, DualPolytope
from .polytope import Polytope, convex_hull
from .valuations import ValuationOp

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class FormatError(ValueError):
    """Malformed input payload; the CLI maps this to exit code 2."""


def parse_rational(x) -> Fraction:
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip()
        if not _RATIONAL_RE.match(s):
            raise FormatError(
                f"bad rational {x!r}: use an integer or 'p/q' (decimals are rejected)"
            )
        return Fraction(s)
    raise FormatError(f"bad rational {x!r}: expected string or integer")


def format_rational(q: Fraction) -> str:
    return str(q)


def parse_point(entry, dim: int | None = None) -> tuple:
    if not isinstance(entry, (list, tuple)):
        raise FormatError(f"bad point {entry!r}: expected a coordinate array")
    pt = tuple(parse_rational(x) for x in entry)
    if dim is not None and len(pt) != dim:
        raise FormatError(f"point {entry!r} has dimension {len(pt)}, expected {dim}")
    return pt


def polytope_to_json(P: Polytope | DualPolytope, space: str | None = None) -> dict:
    if isinstance(P, DualPolytope):
        body = P.body
        space = "W_dual" if space is None else space
    else:
        body = P
    out = {
        "ambient_dim": body.ambient_dim,
        "vertices": [[format_rational(x) for x in v] for v in body.vertices],
    }
    if space is not None:
        out["space"] = space
    return out


def polytope_from_json(data) -> Polytope:
    if not isinstance(data, dict):
        raise FormatError("polytope payload must be a JSON object")
    try:
        dim = data["ambient_dim"]
        raw = data["vertices"]
    except KeyError as e:
        raise FormatError(f"polytope payload missing field {e.args[0]!r}") from None
    if not isinstance(dim, int) or not 2 <= dim <= 4:
        raise FormatError(f"bad ambient_dim {dim!r}: expected 2, 3 or 4")
    if not isinstance(raw, list) or not raw:
        raise FormatError("polytope payload needs a nonempty vertex list")
    pts = [parse_point(v, dim) for v in raw]
    return convex_hull(pts, dim)


def dual_from_json(data) -> DualPolytope:
    return DualPolytope(polytope_from_json(data))


def body_from_json(data) -> Polytope | DualPolytope:
    P = polytope_from_json(data)
    if isinstance(data, dict) and data.get("space") == "W_dual":
        return DualPolytope(P)
    return P


def load_polytope(path: str) -> Polytope:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise FormatError(f"{path} is not valid JSON: {e}") from None
    try:
        return polytope_from_json(data)
    except FormatError as e:
        raise FormatError(f"{path}: {e}") from None


def save_json(path: str, payload: dict):
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cplx_from_json(pair) -> Cplx:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise FormatError(f"bad complex entry {pair!r}: expected [re, im]")
    return Cplx(parse_rational(pair[0]), parse_rational(pair[1]))


def matrix2_from_json(data) -> ComplexMatrix2:
    """{"entries": [[[re, im], [re, im]], [[re, im], [re, im]]]} row-major."""
    if not isinstance(data, dict) or "entries" not in data:
        raise FormatError("complex matrix payload must be {'entries': ...}")
    rows = data["entries"]
    if (
        not isinstance(rows, list)
        or len(rows) != 2
        or any(not isinstance(r, list) or len(r) != 2 for r in rows)
    ):
        raise FormatError("complex matrix entries must be a 2x2 array of [re, im] pairs")
    (a, b), (c, d) = rows
    return ComplexMatrix2(
        cplx_from_json(a), cplx_from_json(b), cplx_from_json(c), cplx_from_json(d)
    )


def matrix2_to_json(g: ComplexMatrix2) -> dict:
    def pair(z: Cplx):
        return [format_rational(z.re), format_rational(z.im)]

    return {"entries": [[pair(g.a), pair(g.b)], [pair(g.c), pair(g.d)]]}


OP_KINDS = ("proj", "diff", "d_m", "pi_n", "dtilde_m", "z_combined")


def op_from_json(data) -> ValuationOp:
    """Operator spec: {"op": "z_combined", "M": <planar body>, "N": <planar body>}."""
    if not isinstance(data, dict) or "op" not in data:
        raise FormatError("operator payload must be {'op': kind, ...}")
    kind = data["op"]
    M = polytope_from_json(data["M"]) if "M" in data and data["M"] is not None else None
    N = polytope_from_json(data["N"]) if "N" in data and data["N"] is not None else None
    return build_op(kind, M, N)


def op_to_json(op: ValuationOp) -> dict:
    out = {"op": op.kind}
    base = op.inner if op.inner is not None else op
    if base.M is not None:
        out["M"] = polytope_to_json(base.M)
    if base.N is not None:
        out["N"] = polytope_to_json(base.N)
    return out


def build_op(kind: str, M: Polytope | None, N: Polytope | None) -> ValuationOp:
    """Build an operator from a kind token, accepting cov_of:<kind> wrappers."""
    from .valuations import covariant_of

    wrap = False
    if isinstance(kind, str) and kind.startswith("cov_of:"):
        wrap = True
        kind = kind[len("cov_of:"):]
    if kind not in OP_KINDS:
        raise FormatError(f"unknown operator kind {kind!r}; known: {', '.join(OP_KINDS)}")
    try:
        op = ValuationOp(kind, M=M, N=N)
    except ValueError as e:
        raise FormatError(str(e)) from None
    if wrap:
        if not op.is_contravariant:
            raise FormatError(f"cov_of wraps contravariant kinds, not {kind!r}")
        op = covariant_of(op)
    return op


def parse_inline_direction(text: str, dim: int = 4) -> tuple:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != dim:
        raise FormatError(f"direction {text!r} needs {dim} comma-separated rationals")
    return tuple(parse_rational(p) for p in parts)


def dirs_from_json(data) -> list[tuple]:
    if isinstance(data, dict) and "dirs" in data:
        data = data["dirs"]
    if not isinstance(data, list) or not data:
        raise FormatError("directions payload must be a nonempty JSON array")
    return [parse_point(d) for d in data]
