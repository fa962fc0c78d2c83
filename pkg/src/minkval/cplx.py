"""The complex structure W = C^2 realized on R^4.

Fixed identification (x1, y1, x2, y2) <-> (x1 + i*y1, x2 + i*y2).  Under it
complex scalar multiplication is block-diagonal and e1, i*e1, e2, i*e2 form
the standard basis.  Bodies in the dual space W* are wrapped in DualPolytope
so that W and W* cannot be mixed by accident: a DualPolytope is supported at
points of W, a plain Polytope at covectors, and the group acts on the two
sides by g and by g^{-*} respectively.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .linalg import mat_apply, mat_transpose
from .polytope import Polytope, affine_transform, minkowski_sum


@dataclass(frozen=True)
class Cplx:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction

    @staticmethod
    def of(re, im=0) -> "Cplx":
        return Cplx(Fraction(re), Fraction(im))

    def __add__(self, other: "Cplx") -> "Cplx":
        return Cplx(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "Cplx") -> "Cplx":
        return Cplx(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "Cplx") -> "Cplx":
        return Cplx(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "Cplx":
        return Cplx(-self.re, -self.im)

    def __truediv__(self, other: "Cplx") -> "Cplx":
        d = other.abs2()
        if d == 0:
            raise ZeroDivisionError("division by complex zero")
        return Cplx(
            (self.re * other.re + self.im * other.im) / d,
            (self.im * other.re - self.re * other.im) / d,
        )

    def conjugate(self) -> "Cplx":
        return Cplx(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __repr__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


C_ZERO = Cplx.of(0)
C_ONE = Cplx.of(1)
C_I = Cplx.of(0, 1)


def to_complex_pair(p) -> tuple[Cplx, Cplx]:
    if len(p) != 4:
        raise ValueError("expected a point of R^4")
    return Cplx(Fraction(p[0]), Fraction(p[1])), Cplx(Fraction(p[2]), Fraction(p[3]))


def from_complex_pair(z1: Cplx, z2: Cplx):
    return (z1.re, z1.im, z2.re, z2.im)


def scalar_matrix(alpha: Cplx):
    """Real 4x4 matrix of multiplication by alpha on both complex coordinates."""
    r, s = Fraction(alpha.re), Fraction(alpha.im)
    z = Fraction(0)
    return (
        (r, -s, z, z),
        (s, r, z, z),
        (z, z, r, -s),
        (z, z, s, r),
    )


def planar_scalar_matrix(alpha: Cplx):
    r, s = Fraction(alpha.re), Fraction(alpha.im)
    return ((r, -s), (s, r))


@dataclass(frozen=True)
class ComplexMatrix2:
    """Element of GL(2, C) with exact rational entries, row-major [[a, b], [c, d]]."""

    a: Cplx
    b: Cplx
    c: Cplx
    d: Cplx

    @staticmethod
    def identity() -> "ComplexMatrix2":
        return ComplexMatrix2(C_ONE, C_ZERO, C_ZERO, C_ONE)

    @staticmethod
    def diagonal(lam: Cplx, mu: Cplx) -> "ComplexMatrix2":
        return ComplexMatrix2(lam, C_ZERO, C_ZERO, mu)

    @staticmethod
    def shear_upper(gamma: Cplx) -> "ComplexMatrix2":
        """g e1 = e1, g e2 = gamma e1 + e2."""
        return ComplexMatrix2(C_ONE, gamma, C_ZERO, C_ONE)

    @staticmethod
    def shear_lower(gamma: Cplx) -> "ComplexMatrix2":
        return ComplexMatrix2(C_ONE, C_ZERO, gamma, C_ONE)

    def det(self) -> Cplx:
        return self.a * self.d - self.b * self.c

    def is_sl(self) -> bool:
        return self.det() == C_ONE

    def inverse(self) -> "ComplexMatrix2":
        dt = self.det()
        if dt.is_zero():
            raise ValueError("singular complex matrix")
        return ComplexMatrix2(self.d / dt, -self.b / dt, -self.c / dt, self.a / dt)

    def __matmul__(self, other: "ComplexMatrix2") -> "ComplexMatrix2":
        return ComplexMatrix2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def apply(self, p) -> tuple:
        z1, z2 = to_complex_pair(p)
        return from_complex_pair(self.a * z1 + self.b * z2, self.c * z1 + self.d * z2)

    def real_matrix(self):
        """The 4x4 rational matrix of this map on (x1, y1, x2, y2)."""
        rows = []
        for blk_row in ((self.a, self.b), (self.c, self.d)):
            for part in range(2):
                row = []
                for e in blk_row:
                    if part == 0:
                        row.extend((e.re, -e.im))
                    else:
                        row.extend((e.im, e.re))
                rows.append(tuple(Fraction(x) for x in row))
        return tuple(rows)

    def scaled(self, t) -> "ComplexMatrix2":
        t = Cplx.of(t)
        return ComplexMatrix2(self.a * t, self.b * t, self.c * t, self.d * t)


@dataclass(frozen=True)
class DualPolytope:
    """A polytope living in W*; the vertex tuples are covector coordinates.

    Support evaluation takes a point of W.  Wrapping keeps the W / W*
    bookkeeping honest: operators that act on W reject DualPolytope inputs
    and vice versa.
    """

    body: Polytope

    @property
    def vertices(self):
        return self.body.vertices

    @property
    def is_empty(self) -> bool:
        return self.body.is_empty

    def support(self, w) -> Fraction:
        """max over xi in the body of <xi, w> for a point w of W."""
        return self.body.support(w)

    def __add__(self, other: "DualPolytope") -> "DualPolytope":
        if not isinstance(other, DualPolytope):
            raise TypeError("can only Minkowski-add DualPolytope to DualPolytope")
        return DualPolytope(minkowski_sum(self.body, other.body))

    def translate(self, t) -> "DualPolytope":
        return DualPolytope(self.body.translate(t))


# The duality map u -> (w -> Re det(u, w)) on coordinates: with
# u = (p1, q1, p2, q2) the covector coordinates of the image are
# (-p2, q2, p1, -q1).
DET_DUALITY_MATRIX = (
    (Fraction(0), Fraction(0), Fraction(-1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(1)),
    (Fraction(1), Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(-1), Fraction(0), Fraction(0)),
)

DET_DUALITY_INVERSE = (
    (Fraction(0), Fraction(0), Fraction(1), Fraction(0)),
    (Fraction(0), Fraction(0), Fraction(0), Fraction(-1)),
    (Fraction(-1), Fraction(0), Fraction(0), Fraction(0)),
    (Fraction(0), Fraction(1), Fraction(0), Fraction(0)),
)


def _require_primal(P, what: str):
    if isinstance(P, DualPolytope):
        raise TypeError(f"{what} expects a body in W, got a DualPolytope in W*")
    if not isinstance(P, Polytope):
        raise TypeError(f"{what} expects a Polytope")


def _require_dual(Q, what: str):
    if not isinstance(Q, DualPolytope):
        raise TypeError(f"{what} expects a DualPolytope in W*")


def complex_scale(alpha: Cplx, P: Polytope) -> Polytope:
    """The image {alpha * k : k in P} for P in W (ambient 4) or in C (ambient 2)."""
    _require_primal(P, "complex_scale")
    if P.ambient_dim == 4:
        return affine_transform(P, scalar_matrix(alpha))
    if P.ambient_dim == 2:
        return affine_transform(P, planar_scalar_matrix(alpha))
    raise ValueError("complex scaling needs an ambient-4 or planar body")


def det_pair(u, v) -> Cplx:
    """The determinant form det(u, v) = u1 v2 - u2 v1 on W x W."""
    u1, u2 = to_complex_pair(u)
    v1, v2 = to_complex_pair(v)
    return u1 * v2 - u2 * v1


def det_image(K: Polytope, w) -> Polytope:
    """The planar body {det(k, w) : k in K} inside C."""
    _require_primal(K, "det_image")
    if K.is_empty:
        return Polytope.empty(2)
    pts = []
    for v in K.vertices:
        z = det_pair(v, w)
        pts.append((z.re, z.im))
    return Polytope.from_points(pts, 2)


def det_duality(P: Polytope) -> DualPolytope:
    """The identification W -> W*, u -> Re det(u, .), applied vertexwise."""
    _require_primal(P, "det_duality")
    if P.is_empty:
        return DualPolytope(Polytope.empty(4))
    return DualPolytope(affine_transform(P, DET_DUALITY_MATRIX))


def det_duality_inverse(Q: DualPolytope) -> Polytope:
    _require_dual(Q, "det_duality_inverse")
    if Q.is_empty:
        return Polytope.empty(4)
    return affine_transform(Q.body, DET_DUALITY_INVERSE)


def det_duality_point(u) -> tuple:
    return mat_apply(DET_DUALITY_MATRIX, tuple(Fraction(x) for x in u))


def group_action(g: ComplexMatrix2, P: Polytope) -> Polytope:
    """gK for a body K in W."""
    _require_primal(P, "group_action")
    if g.det().is_zero():
        raise ValueError("group_action requires invertible g")
    return affine_transform(P, g.real_matrix())


def dual_action(g: ComplexMatrix2, Q: DualPolytope) -> DualPolytope:
    """g^{-*} Q, characterized by <g^{-*} xi, w> = <xi, g^{-1} w>."""
    _require_dual(Q, "dual_action")
    m = mat_transpose(g.inverse().real_matrix())
    return DualPolytope(affine_transform(Q.body, m))


def dual_scalar_scale(alpha: Cplx, Q: DualPolytope) -> DualPolytope:
    """Complex scalar action on W*: (alpha . xi)(w) = xi(alpha w)."""
    _require_dual(Q, "dual_scalar_scale")
    m = mat_transpose(scalar_matrix(alpha))
    return DualPolytope(affine_transform(Q.body, m))
