"""Minkowski valuations on bodies in W = C^2, with explicit polytope outputs
and formula-direct support evaluators.

Contravariant operators (projection body, complex projection body, the
dual-twisted complex difference body, and their sum) land in W* and are
returned as DualPolytope; covariant ones (difference body, complex difference
body) stay in W.  Every operator ships two faces: a reconstruction that
returns the output body as an explicit polytope, and a SupportEvaluator that
computes h(ZK, w) straight from the defining formula.  The two agree exactly
and the harness checks it.

Operator kind tokens used on the wire and in the CLI:
proj, diff, d_m, pi_n, dtilde_m, z_combined, cov_of:<kind>.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cplx import (
    Cplx,
    DET_DUALITY_INVERSE,
    DET_DUALITY_MATRIX,
    DualPolytope,
    complex_scale,
    det_duality,
    det_duality_inverse,
    det_pair,
    scalar_matrix,
)
from .linalg import mat_apply, mat_transpose
from .polytope import Polytope, convex_hull, minkowski_sum

CONTRAVARIANT_KINDS = ("proj", "pi_n", "dtilde_m", "z_combined")
COVARIANT_KINDS = ("diff", "d_m")
BASE_KINDS = CONTRAVARIANT_KINDS + COVARIANT_KINDS


def zero_body() -> Polytope:
    return Polytope.point((0, 0, 0, 0))


def zero_dual() -> DualPolytope:
    return DualPolytope(zero_body())


def planar_atoms(M: Polytope) -> tuple[Cplx, ...]:
    """Area-measure atoms of a planar body read as complex numbers.

    For a polygon these are the edge normals scaled by edge length; for a
    segment the two opposite normals scaled by its length; for a point there
    are none.
    """
    if M.ambient_dim != 2:
        raise ValueError("parameter body must be planar (ambient dimension 2)")
    if M.is_empty:
        raise ValueError("parameter body must be nonempty")
    return tuple(Cplx(a[0], a[1]) for a in M.area_measure())


@dataclass(frozen=True)
class ValuationOp:
    """An operator handle: kind token plus the planar parameter bodies it needs."""

    kind: str
    M: Polytope | None = None
    N: Polytope | None = None
    inner: "ValuationOp | None" = None

    def __post_init__(self):
        if self.kind.startswith("cov_of:"):
            if self.inner is None or self.inner.kind not in CONTRAVARIANT_KINDS:
                raise ValueError("cov_of wraps a contravariant operator")
            return
        if self.kind not in BASE_KINDS:
            raise ValueError(f"unknown valuation kind {self.kind!r}")
        needs_m = self.kind in ("d_m", "dtilde_m", "z_combined")
        needs_n = self.kind in ("pi_n", "z_combined")
        if needs_m != (self.M is not None):
            raise ValueError(f"kind {self.kind!r} {'requires' if needs_m else 'forbids'} M")
        if needs_n != (self.N is not None):
            raise ValueError(f"kind {self.kind!r} {'requires' if needs_n else 'forbids'} N")
        for name, body in (("M", self.M), ("N", self.N)):
            if body is not None:
                if body.ambient_dim != 2 or body.is_empty:
                    raise ValueError(f"parameter {name} must be a nonempty planar body")

    # -- constructors --------------------------------------------------------

    @staticmethod
    def proj() -> "ValuationOp":
        return ValuationOp("proj")

    @staticmethod
    def diff() -> "ValuationOp":
        return ValuationOp("diff")

    @staticmethod
    def d_m(M: Polytope) -> "ValuationOp":
        return ValuationOp("d_m", M=M)

    @staticmethod
    def pi_n(N: Polytope) -> "ValuationOp":
        return ValuationOp("pi_n", N=N)

    @staticmethod
    def dtilde_m(M: Polytope) -> "ValuationOp":
        return ValuationOp("dtilde_m", M=M)

    @staticmethod
    def z_combined(M: Polytope, N: Polytope) -> "ValuationOp":
        return ValuationOp("z_combined", M=M, N=N)

    @property
    def is_contravariant(self) -> bool:
        return self.kind in CONTRAVARIANT_KINDS

    @property
    def is_covariant(self) -> bool:
        return self.kind in COVARIANT_KINDS or self.kind.startswith("cov_of:")

    @property
    def homogeneity_degrees(self) -> frozenset[int]:
        base = self.inner if self.inner is not None else self
        return {
            "proj": frozenset({3}),
            "diff": frozenset({1}),
            "d_m": frozenset({1}),
            "pi_n": frozenset({3}),
            "dtilde_m": frozenset({1}),
            "z_combined": frozenset({1, 3}),
        }[base.kind]


def covariant_of(op: ValuationOp) -> ValuationOp:
    """The covariant companion K -> Phi^{-1}(Z K) of a contravariant operator."""
    if not op.is_contravariant:
        raise ValueError("covariant_of expects a contravariant operator")
    return ValuationOp(kind=f"cov_of:{op.kind}", inner=op)


# -- reconstructions ------------------------------------------------------------


def _check_source(K: Polytope):
    if isinstance(K, DualPolytope):
        raise TypeError("valuations act on bodies in W, not W*")
    if K.ambient_dim != 4:
        raise ValueError("source body must live in ambient dimension 4")


def projection_body(K: Polytope) -> DualPolytope:
    """The zonotope sum of segments [-sigma_F/2, sigma_F/2] in W*.

    h(Pi K, v) = (1/2) sum_F |<sigma_F, v>| = 2 V(K, K, K, [-v, v]).
    """
    _check_source(K)
    if K.is_empty:
        return zero_dual()
    total = zero_body()
    for atom in K.area_measure():
        half = tuple(x / 2 for x in atom)
        seg = Polytope.segment(tuple(-x for x in half), half)
        total = minkowski_sum(total, seg)
    return DualPolytope(total)


def difference_body(K: Polytope) -> Polytope:
    """K + (-K); centrally symmetric, 1-homogeneous, covariant."""
    _check_source(K)
    if K.is_empty:
        return zero_body()
    return minkowski_sum(K, -K)


def complex_difference_body(M: Polytope, K: Polytope) -> Polytope:
    """Minkowski sum of the complex dilates nu_j K over the atoms of M.

    Realizes the weighted rotation average h -> integral of h(alpha K, .)
    against the boundary measure of M: the atom nu_j = len_j * u_j absorbs
    the weight by 1-homogeneity, len_j h(u_j K, xi) = h((len_j u_j) K, xi).
    """
    _check_source(K)
    atoms = planar_atoms(M)
    if K.is_empty or not atoms:
        return zero_body()
    total = zero_body()
    for nu in atoms:
        total = minkowski_sum(total, complex_scale(nu, K))
    return total


def complex_projection_body(N: Polytope, K: Polytope) -> DualPolytope:
    """The body in W* with h(Pi_N K, w) = V(K, K, K, N.w), N.w = {c w : c in N}.

    Reconstruction: expanding the facet form of the mixed volume, each facet
    atom sigma_F contributes (1/4) conv{lambda_{c,F} : c vertex of N} with
    lambda_{c,F} the covector w -> <sigma_F, c w>.
    """
    _check_source(K)
    if N.ambient_dim != 2 or N.is_empty:
        raise ValueError("parameter N must be a nonempty planar body")
    if K.is_empty:
        return zero_dual()
    vertex_matrices = [
        mat_transpose(scalar_matrix(Cplx(c[0], c[1]))) for c in N.vertices
    ]
    total = zero_body()
    for atom in K.area_measure():
        pts = [tuple(x / 4 for x in mat_apply(m, atom)) for m in vertex_matrices]
        total = minkowski_sum(total, convex_hull(pts, 4))
    return DualPolytope(total)


def dual_complex_difference_body(M: Polytope, K: Polytope) -> DualPolytope:
    """The determinant-duality image of the complex difference body.

    Primary construction: apply the duality map to complex_difference_body.
    The planar-integral route over det(K, w) is available through the
    support evaluator and is pinned to conjugated atoms by the harness.
    """
    _check_source(K)
    return det_duality(complex_difference_body(M, K))


def combined_contravariant(M: Polytope, N: Polytope, K: Polytope) -> DualPolytope:
    """Sum of the degree-1 and degree-3 contravariant parts."""
    return dual_complex_difference_body(M, K) + complex_projection_body(N, K)


def apply_valuation(op: ValuationOp, K: Polytope) -> Polytope | DualPolytope:
    """Evaluate the operator as an explicit output body."""
    if op.kind.startswith("cov_of:"):
        out = apply_valuation(op.inner, K)
        return det_duality_inverse(out)
    if op.kind == "proj":
        return projection_body(K)
    if op.kind == "diff":
        return difference_body(K)
    if op.kind == "d_m":
        return complex_difference_body(op.M, K)
    if op.kind == "pi_n":
        return complex_projection_body(op.N, K)
    if op.kind == "dtilde_m":
        return dual_complex_difference_body(op.M, K)
    if op.kind == "z_combined":
        return combined_contravariant(op.M, op.N, K)
    raise AssertionError(op.kind)


# -- support evaluators ------------------------------------------------------------


class SupportEvaluator:
    """Evaluates h(Z K, .) directly from the defining formula.

    Exact at every rational direction; agrees with the support function of
    the reconstructed body (tested).  The direction argument lives in W for
    contravariant kinds and in W* for covariant ones.
    """

    def __init__(self, op: ValuationOp, K: Polytope):
        _check_source(K)
        self.op = op
        self.K = K
        self._atoms = None
        self._m_atoms = None
        self._n_vertices = None
        self._dual_transpose = mat_transpose(DET_DUALITY_MATRIX)
        self._inner = None
        base = op.inner if op.inner is not None else op
        if op.inner is not None:
            self._inner = SupportEvaluator(op.inner, K)
        if base.kind in ("proj", "pi_n", "z_combined") and not K.is_empty:
            self._atoms = tuple(K.area_measure())
        if base.kind in ("d_m", "dtilde_m", "z_combined"):
            self._m_atoms = planar_atoms(base.M)
        if base.kind in ("pi_n", "z_combined"):
            self._n_vertices = tuple(Cplx(c[0], c[1]) for c in base.N.vertices)

    def at(self, w) -> Fraction:
        if self.K.is_empty:
            return Fraction(0)
        if self._inner is not None:
            inner_dir = mat_apply(mat_transpose(DET_DUALITY_INVERSE), tuple(Fraction(x) for x in w))
            return self._inner.at(inner_dir)
        return self._base_at(self.op.kind, w)

    def _base_at(self, kind: str, w) -> Fraction:
        w = tuple(Fraction(x) for x in w)
        if kind == "proj":
            total = Fraction(0)
            for atom in self._atoms:
                total += abs(sum(a * x for a, x in zip(atom, w)))
            return total / 2
        if kind == "diff":
            return self.K.support(w) + self.K.support(tuple(-x for x in w))
        if kind == "d_m":
            total = Fraction(0)
            for nu in self._m_atoms:
                xi = mat_apply(mat_transpose(scalar_matrix(nu)), w)
                total += self.K.support(xi)
            return total
        if kind == "pi_n":
            total = Fraction(0)
            scaled = [mat_apply(scalar_matrix(c), w) for c in self._n_vertices]
            for atom in self._atoms:
                total += max(sum(a * x for a, x in zip(atom, cw)) for cw in scaled)
            return total / 4
        if kind == "dtilde_m":
            xi = mat_apply(self._dual_transpose, w)
            total = Fraction(0)
            for nu in self._m_atoms:
                eta = mat_apply(mat_transpose(scalar_matrix(nu)), xi)
                total += self.K.support(eta)
            return total
        if kind == "z_combined":
            return self._base_at("dtilde_m", w) + self._base_at("pi_n", w)
        raise AssertionError(kind)


def dual_diff_support_via_det(M: Polytope, K: Polytope, w, conjugate_atoms: bool = True) -> Fraction:
    """The planar-integral route for the dual-twisted complex difference body.

    Evaluates sum_j h(det(K, w), b_j) with the planar pairing <a, b> =
    Re(conj(a) b), where b_j is the conjugate of the j-th atom of M under
    the pinned convention (conjugate_atoms=True) or the raw atom under the
    alternative.  The consistency harness pins the convention against the
    duality-map route.
    """
    _check_source(K)
    if K.is_empty:
        return Fraction(0)
    atoms = planar_atoms(M)
    w = tuple(Fraction(x) for x in w)
    images = [det_pair(v, w) for v in K.vertices]
    total = Fraction(0)
    for nu in atoms:
        b = nu.conjugate() if conjugate_atoms else nu
        total += max(a.re * b.re + a.im * b.im for a in images)
    return total
