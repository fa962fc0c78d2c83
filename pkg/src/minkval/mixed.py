"""Exact mixed volumes of quadruples of polytopes in R^4.

Two independent routes are provided and cross-validated by the test harness:
polarization over Minkowski sums of sub-collections (the defining formula)
and the facet form (1/4) sum_F h(L, sigma_F) for V(K, K, K, L).  The facet
form extends to arbitrary 1-homogeneous integrands.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Decimal, getcontext
from fractions import Fraction
from itertools import combinations
from typing import Callable, NamedTuple, Sequence

from .polytope import Polytope, minkowski_sum


def _check_quadruple(bodies: Sequence[Polytope]):
    if len(bodies) != 4:
        raise ValueError("mixed volume takes exactly four bodies")
    for K in bodies:
        if not isinstance(K, Polytope):
            raise TypeError("mixed volume arguments must be Polytope")
        if K.ambient_dim != 4:
            raise ValueError("mixed volume requires ambient dimension 4")
        if K.is_empty:
            raise ValueError("mixed volume of an empty body is undefined")


def mixed_volume(K1: Polytope, K2: Polytope, K3: Polytope, K4: Polytope) -> Fraction:
    """V(K1, K2, K3, K4) by polarization; symmetric and Minkowski-multilinear.

    V = (1/4!) sum over nonempty S of (-1)^(4-|S|) vol(sum of K_i, i in S).
    Repeated bodies are collapsed to dilates before summing, which keeps the
    intermediate hulls small.
    """
    bodies = (K1, K2, K3, K4)
    _check_quadruple(bodies)

    canon = []
    for i, K in enumerate(bodies):
        j = next((k for k in range(i) if bodies[k] == K), i)
        canon.append(j)

    vol_cache: dict[tuple[int, ...], Fraction] = {}

    def subset_volume(ids: tuple[int, ...]) -> Fraction:
        key = tuple(sorted(canon[i] for i in ids))
        if key not in vol_cache:
            counts: dict[int, int] = {}
            for c in key:
                counts[c] = counts.get(c, 0) + 1
            parts = [bodies[c].scale(m) if m > 1 else bodies[c] for c, m in counts.items()]
            total = parts[0]
            for p in parts[1:]:
                total = minkowski_sum(total, p)
            vol_cache[key] = total.volume()
        return vol_cache[key]

    acc = Fraction(0)
    for size in range(1, 5):
        sign = (-1) ** (4 - size)
        for ids in combinations(range(4), size):
            acc += sign * subset_volume(ids)
    return acc / 24


def mixed_volume_31(K: Polytope, L: Polytope) -> Fraction:
    """V(K, K, K, L) via the facet form (1/4) sum_F h(L, sigma_F).

    Exact for K of any affine dimension: a body of dimension <= 2 has an
    empty area measure, so the value is 0; a 3-dimensional body contributes
    through its two opposite atoms.
    """
    _check_quadruple((K, K, K, L))
    total = Fraction(0)
    for atom in K.area_measure():
        total += L.support(atom)
    return total / 4


class ApproxValue(NamedTuple):
    """A lossy scalar: high-precision decimal value plus summation error bound.

    The bound covers only the rounding of the final summation; the accuracy
    of the integrand's own values is the caller's contract.
    """

    value: Decimal
    bound: Decimal


@dataclass
class HomogeneousFunction:
    """A 1-homogeneous integrand on covectors, f(lam * xi) = lam * f(xi).

    Homogeneity is spot-checked on registration at a few probe directions;
    exact integrands are probed exactly, lossy ones within 1e-12 relative.
    """

    label: str
    fn: Callable[[tuple], object]
    probe_dirs: tuple = field(
        default=((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1))
    )

    def __post_init__(self):
        for d in self.probe_dirs:
            v1 = self.fn(tuple(Fraction(x) for x in d))
            v2 = self.fn(tuple(Fraction(2 * x) for x in d))
            if isinstance(v1, Fraction) and isinstance(v2, Fraction):
                if v2 != 2 * v1:
                    raise ValueError(f"{self.label}: not 1-homogeneous at {d}")
            else:
                a, b = float(v2), 2.0 * float(v1)
                if abs(a - b) > 1e-12 * max(1.0, abs(a), abs(b)):
                    raise ValueError(f"{self.label}: not 1-homogeneous at {d}")

    def __call__(self, xi) -> object:
        return self.fn(xi)


def mixed_volume_fn(K: Polytope, phi: HomogeneousFunction | Callable) -> Fraction | ApproxValue:
    """V(K, K, K, phi) = (1/4) sum_F phi(sigma_F) over area-measure atoms.

    Returns an exact Fraction when every integrand value is a Fraction;
    otherwise evaluates in 60-digit decimal (about 200 bits) and returns an
    ApproxValue carrying the summation error bound, so nothing rounds
    silently.
    """
    if K.ambient_dim != 4:
        raise ValueError("mixed_volume_fn requires ambient dimension 4")
    values = [phi(atom) for atom in K.area_measure()]
    if all(isinstance(v, Fraction) for v in values):
        return sum(values, Fraction(0)) / 4
    ctx = getcontext().copy()
    ctx.prec = 60
    total = Decimal(0)
    max_abs = Decimal(0)
    for v in values:
        d = Decimal(repr(v)) if isinstance(v, float) else Decimal(v)
        total = ctx.add(total, d)
        if abs(d) > max_abs:
            max_abs = abs(d)
    total = ctx.divide(total, Decimal(4))
    ulp = max_abs.scaleb(-(ctx.prec - 1)) if max_abs != 0 else Decimal(0)
    bound = ulp * (len(values) + 1)
    return ApproxValue(total, bound)
