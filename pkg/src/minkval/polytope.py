"""Exact rational convex polytopes in ambient dimension 2, 3, 4.

Vertex-representation polytopes with exact Fraction coordinates.  Hulls are
computed by an incremental beneath-beyond walk over integer-cleared
coordinates with exact sign predicates; coplanar simplicial facets are merged
by their primitive integer normal, so facet identity and area-measure atoms
are canonical.  Lower-dimensional polytopes are first-class: operations
degrade per contract rather than erroring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .linalg import (
    IntRowBasis,
    clear_denominators,
    cross_general,
    dot,
    mat_inverse,
    primitive,
    vec_sub,
)

Coords = tuple[Fraction, ...]


@dataclass(frozen=True)
class Facet:
    """One facet of a full-dimensional polytope.

    normal is the primitive integer outward normal, offset = h(P, normal),
    vertex_ids index into the polytope's sorted vertex tuple.
    """

    normal: tuple[int, ...]
    offset: Fraction
    vertex_ids: frozenset[int]


@dataclass(frozen=True)
class AreaMeasure:
    """Atomic surface area measure as exact weighted outward normals.

    Each atom is vol_{n-1}(F) * u_F for one merged facet direction F; for an
    (n-1)-dimensional body the two atoms are +/- vol_{n-1}(P) * u.  Atoms of
    distinct directions are never parallel, and they sum to zero.
    """

    ambient_dim: int
    atoms: tuple[Coords, ...]

    def closure_sum(self) -> Coords:
        total = [Fraction(0)] * self.ambient_dim
        for a in self.atoms:
            for i, x in enumerate(a):
                total[i] += x
        return tuple(total)

    def __iter__(self):
        return iter(self.atoms)

    def __len__(self) -> int:
        return len(self.atoms)


def _dedupe(points: list[Coords]) -> list[Coords]:
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


def _facet_plane(ipts, vert_ids, extra=None):
    """Primitive normal and offset of the hyperplane through the given points."""
    ids = list(vert_ids)
    base = ipts[ids[0]]
    vecs = [vec_sub(ipts[i], base) for i in ids[1:]]
    if extra is not None:
        vecs.append(vec_sub(extra, base))
    n = primitive(cross_general(vecs))
    if all(x == 0 for x in n):
        raise RuntimeError("degenerate facet candidate")
    return n, dot(n, base)


def _hull_engine(ipts: list[tuple[int, ...]], d: int, simplex: list[int]):
    """Beneath-beyond hull of deduped integer points with affine rank d >= 2.

    Returns (vertex_ids, simplicial_facets, merged_pairs) where simplicial
    facets are (point_id_tuple, primitive_normal, int_offset) triples and
    merged pairs are (normal, offset) facet directions after coplanar merge.
    Simplicial facets may reference non-extreme points; vertex_ids hold the
    extreme ones only.
    """
    interior2 = tuple(sum(ipts[i][k] for i in simplex) for k in range(d))
    scale = d + 1

    facets: dict[int, tuple[tuple[int, ...], tuple[int, ...], int]] = {}
    next_id = 0

    def orient(n, c):
        v = dot(n, interior2)
        if v > scale * c:
            return tuple(-x for x in n), -c
        if v == scale * c:
            raise RuntimeError("interior reference lies on facet hyperplane")
        return n, c

    def add_facet(vert_ids, n, c):
        nonlocal next_id
        facets[next_id] = (tuple(sorted(vert_ids)), n, c)
        next_id += 1

    for i in range(d + 1):
        verts = [simplex[j] for j in range(d + 1) if j != i]
        n, c = _facet_plane(ipts, verts)
        n, c = orient(n, c)
        add_facet(verts, n, c)

    in_simplex = set(simplex)
    for p_idx in range(len(ipts)):
        if p_idx in in_simplex:
            continue
        p = ipts[p_idx]
        visible = [fid for fid, (_, n, c) in facets.items() if dot(n, p) > c]
        if not visible:
            continue
        ridge_count: dict[frozenset[int], int] = {}
        for fid in visible:
            verts = facets[fid][0]
            for k in range(d):
                ridge = frozenset(verts[:k] + verts[k + 1:])
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        for fid in visible:
            del facets[fid]
        for ridge, count in ridge_count.items():
            if count != 1:
                continue
            n, c = _facet_plane(ipts, sorted(ridge), extra=p)
            n, c = orient(n, c)
            add_facet(tuple(ridge) + (p_idx,), n, c)

    simplicial = [(verts, n, c) for verts, n, c in facets.values()]

    merged: dict[tuple[int, ...], int] = {}
    for _, n, c in simplicial:
        if n in merged and merged[n] != c:
            raise RuntimeError("parallel facets with distinct offsets")
        merged[n] = c

    candidates = sorted({v for verts, _, _ in simplicial for v in verts})
    merged_items = list(merged.items())
    vertex_ids = []
    for v in candidates:
        basis = IntRowBasis()
        for n, c in merged_items:
            if dot(n, ipts[v]) == c:
                basis.add(n)
                if basis.rank == d:
                    vertex_ids.append(v)
                    break
    return vertex_ids, simplicial, merged_items


class Polytope:
    """Immutable V-representation polytope with exact rational coordinates.

    vertices hold only extreme points, sorted lexicographically.  An empty
    polytope (affine_dim -1) is a flagged degenerate value produced by
    hyperplane splits that miss the body.
    """

    __slots__ = (
        "ambient_dim",
        "vertices",
        "affine_dim",
        "_scale",
        "_ivertices",
        "_simplicial",
        "_merged",
        "_facets",
        "_area",
        "_volume",
        "_basis_ids",
    )

    def __init__(self, *, _raw=None):
        if _raw is None:
            raise TypeError("use convex_hull() or Polytope.from_points()")
        (
            self.ambient_dim,
            self.vertices,
            self.affine_dim,
            self._scale,
            self._ivertices,
            self._simplicial,
            self._merged,
            self._basis_ids,
        ) = _raw
        self._facets = None
        self._area = None
        self._volume = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_points(points: Iterable[Sequence], ambient_dim: int | None = None) -> "Polytope":
        return convex_hull(points, ambient_dim)

    @staticmethod
    def empty(ambient_dim: int) -> "Polytope":
        return Polytope(_raw=(ambient_dim, (), -1, 1, (), (), (), ()))

    @staticmethod
    def point(coords: Sequence) -> "Polytope":
        return convex_hull([coords])

    @staticmethod
    def segment(a: Sequence, b: Sequence) -> "Polytope":
        return convex_hull([a, b])

    # -- basic predicates ----------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.affine_dim < 0

    @property
    def is_point(self) -> bool:
        return self.affine_dim == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.vertices))

    def __repr__(self) -> str:
        if self.is_empty:
            return f"Polytope.empty({self.ambient_dim})"
        return (
            f"Polytope(dim={self.ambient_dim}, affine_dim={self.affine_dim}, "
            f"nverts={len(self.vertices)})"
        )

    # -- structure -----------------------------------------------------------

    @property
    def facets(self) -> tuple[Facet, ...]:
        """Merged facets; populated only for full-dimensional polytopes."""
        if self._facets is None:
            if self.affine_dim != self.ambient_dim:
                self._facets = ()
            else:
                out = []
                for n, c_int in self._merged:
                    offset = Fraction(c_int, self._scale)
                    ids = frozenset(
                        i for i, v in enumerate(self.vertices) if dot(n, v) == offset
                    )
                    out.append(Facet(n, offset, ids))
                out.sort(key=lambda f: f.normal)
                self._facets = tuple(out)
        return self._facets

    def support(self, xi: Sequence) -> Fraction:
        """Exact support value max_{x in P} <xi, x>."""
        if self.is_empty:
            raise ValueError("support of an empty polytope is undefined")
        if len(xi) != self.ambient_dim:
            raise ValueError("dimension mismatch in support direction")
        return max(dot(xi, v) for v in self.vertices)

    def volume(self) -> Fraction:
        """Top-dimensional volume; zero for lower-dimensional bodies.

        Computed via the divergence identity vol = (1/n) sum_F h(P, sigma_F)
        evaluated exactly over the simplicial facet pieces.
        """
        if self._volume is None:
            n = self.ambient_dim
            if self.affine_dim < n:
                self._volume = Fraction(0)
            else:
                total = 0
                for verts, normal, _ in self._simplicial:
                    base = self._ivertices[verts[0]]
                    vecs = [vec_sub(self._ivertices[v], base) for v in verts[1:]]
                    w = cross_general(vecs)
                    if dot(w, normal) < 0:
                        w = tuple(-x for x in w)
                    total += dot(w, base)
                self._volume = Fraction(total, factorial(n) * self._scale**n)
        return self._volume

    def area_measure(self) -> AreaMeasure:
        """Surface area measure as exact weighted-normal atoms."""
        if self._area is None:
            n = self.ambient_dim
            if self.affine_dim == n:
                groups: dict[tuple[int, ...], list[int]] = {}
                for verts, normal, _ in self._simplicial:
                    base = self._ivertices[verts[0]]
                    vecs = [vec_sub(self._ivertices[v], base) for v in verts[1:]]
                    w = cross_general(vecs)
                    if dot(w, normal) < 0:
                        w = tuple(-x for x in w)
                    acc = groups.get(normal)
                    if acc is None:
                        groups[normal] = list(w)
                    else:
                        for i, x in enumerate(w):
                            acc[i] += x
                denom = factorial(n - 1) * self._scale ** (n - 1)
                atoms = tuple(
                    sorted(tuple(Fraction(x, denom) for x in w) for w in groups.values())
                )
            elif self.affine_dim == n - 1:
                atoms = self._codim1_atoms()
            else:
                atoms = ()
            self._area = AreaMeasure(n, atoms)
        return self._area

    def _codim1_atoms(self) -> tuple[Coords, ...]:
        n = self.ambient_dim
        base = self._ivertices[0]
        edge_vecs = [vec_sub(self._ivertices[i], base) for i in self._basis_ids]
        u = primitive(cross_general(edge_vecs))
        j = next(i for i, x in enumerate(u) if x != 0)

        simplices = _body_triangulation(self._ivertices, self.affine_dim)
        total = 0
        for simplex in simplices:
            sbase = self._ivertices[simplex[0]]
            vecs = [vec_sub(self._ivertices[v], sbase) for v in simplex[1:]]
            w = cross_general(vecs)
            lam = w[j] // u[j]
            total += abs(lam)
        weight = Fraction(total, factorial(n - 1) * self._scale ** (n - 1))
        plus = tuple(weight * x for x in u)
        minus = tuple(-x for x in plus)
        return tuple(sorted([plus, minus]))

    # -- algebra ---------------------------------------------------------------

    def translate(self, t: Sequence) -> "Polytope":
        if self.is_empty:
            return self
        t = tuple(Fraction(x) for x in t)
        return convex_hull([tuple(a + b for a, b in zip(v, t)) for v in self.vertices])

    def linear_image(self, A: Sequence[Sequence]) -> "Polytope":
        return affine_transform(self, A, None)

    def scale(self, c) -> "Polytope":
        if self.is_empty:
            return self
        c = Fraction(c)
        return convex_hull([tuple(c * x for x in v) for v in self.vertices], self.ambient_dim)

    def __add__(self, other: "Polytope") -> "Polytope":
        return minkowski_sum(self, other)

    def __neg__(self) -> "Polytope":
        if self.is_empty:
            return self
        return convex_hull([tuple(-x for x in v) for v in self.vertices], self.ambient_dim)


def _body_triangulation(ipts: Sequence[tuple[int, ...]], r: int) -> list[tuple[int, ...]]:
    """Triangulate the convex body of the given points (affine rank r >= 1).

    The points live in an r-flat of the ambient space; simplices are returned
    as index tuples with r+1 entries each.
    """
    coords, _ = _flat_coordinates(ipts)
    if r == 1:
        vals = [c[0] for c in coords]
        imin = min(range(len(vals)), key=vals.__getitem__)
        imax = max(range(len(vals)), key=vals.__getitem__)
        return [(imin, imax)]
    _, icoords = clear_denominators(coords)
    simplex = _initial_simplex(icoords, r)
    vertex_ids, simplicial, _ = _hull_engine(icoords, r, simplex)
    base = vertex_ids[0]
    out = []
    for verts, _, _ in simplicial:
        if base not in verts:
            out.append((base,) + tuple(verts))
    return out


def _flat_coordinates(ipts: Sequence[tuple[int, ...]]):
    """Coordinates of the points in a basis of their own affine hull."""
    base = ipts[0]
    basis = IntRowBasis()
    chosen = []
    for i in range(1, len(ipts)):
        if basis.add(vec_sub(ipts[i], base)):
            chosen.append(i)
    r = basis.rank
    cols = [vec_sub(ipts[i], base) for i in chosen]
    row_basis = IntRowBasis()
    row_ids = []
    for ri in range(len(base)):
        if row_basis.add(tuple(col[ri] for col in cols)):
            row_ids.append(ri)
        if len(row_ids) == r:
            break
    square = [[Fraction(cols[cj][ri]) for cj in range(r)] for ri in row_ids]
    inv = mat_inverse(square)
    coords = []
    for p in ipts:
        rhs = [Fraction(p[ri] - base[ri]) for ri in row_ids]
        coords.append(tuple(dot(row, rhs) for row in inv))
    return coords, chosen


def _initial_simplex(ipts: Sequence[tuple[int, ...]], d: int) -> list[int]:
    basis = IntRowBasis()
    simplex = [0]
    for i in range(1, len(ipts)):
        if basis.add(vec_sub(ipts[i], ipts[0])):
            simplex.append(i)
        if len(simplex) == d + 1:
            return simplex
    raise RuntimeError("points do not span the requested dimension")


def convex_hull(points: Iterable[Sequence], ambient_dim: int | None = None) -> Polytope:
    """Convex hull with minimal vertex set and exact facet structure.

    The result is independent of input order and duplicates.  Raises
    ValueError on an empty input or inconsistent point dimensions.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("convex hull of an empty point set")
    dim = ambient_dim if ambient_dim is not None else len(pts[0])
    for p in pts:
        if len(p) != dim:
            raise ValueError(f"point of dimension {len(p)} in ambient dimension {dim}")
    if not 2 <= dim <= 4:
        raise ValueError("ambient dimension must be between 2 and 4")

    pts = _dedupe(pts)
    scale, ipts = clear_denominators(pts)

    basis = IntRowBasis()
    chosen = []
    for i in range(1, len(ipts)):
        if basis.add(vec_sub(ipts[i], ipts[0])):
            chosen.append(i)
    r = basis.rank

    if r == 0:
        v = pts[0]
        return Polytope(_raw=(dim, (v,), 0, scale, (ipts[0],), (), (), ()))

    if r == dim:
        ids, simplicial, merged = _hull_engine(ipts, dim, [0] + chosen)
        vertices = tuple(sorted(pts[i] for i in ids))
        return Polytope(
            _raw=(dim, vertices, dim, scale, tuple(ipts), tuple(simplicial), tuple(merged), tuple(chosen))
        )

    # lower-dimensional body: find extreme points in flat coordinates
    coords, chosen = _flat_coordinates(ipts)
    if r == 1:
        vals = [c[0] for c in coords]
        imin = min(range(len(vals)), key=vals.__getitem__)
        imax = max(range(len(vals)), key=vals.__getitem__)
        ids = [imin, imax]
    else:
        _, icoords = clear_denominators(coords)
        simplex = _initial_simplex(icoords, r)
        ids, _, _ = _hull_engine(icoords, r, simplex)
    vertices = tuple(sorted(pts[i] for i in ids))
    return Polytope(_raw=(dim, vertices, r, scale, tuple(ipts), (), (), tuple(chosen)))


def affine_transform(P: Polytope, A: Sequence[Sequence], t: Sequence | None = None) -> Polytope:
    """Exact image {A v + t : v in P}; changes ambient dimension with A's shape."""
    rows = [tuple(Fraction(x) for x in row) for row in A]
    out_dim = len(rows)
    for row in rows:
        if len(row) != P.ambient_dim:
            raise ValueError("matrix shape does not match polytope dimension")
    if t is None:
        t = (Fraction(0),) * out_dim
    else:
        t = tuple(Fraction(x) for x in t)
        if len(t) != out_dim:
            raise ValueError("translation dimension does not match matrix rows")
    if P.is_empty:
        return Polytope.empty(out_dim)
    images = [tuple(dot(row, v) + c for row, c in zip(rows, t)) for v in P.vertices]
    return convex_hull(images, out_dim)


def minkowski_sum(P: Polytope, Q: Polytope) -> Polytope:
    """Minkowski sum; h(P+Q, xi) = h(P, xi) + h(Q, xi) for every xi."""
    if P.ambient_dim != Q.ambient_dim:
        raise ValueError("dimension mismatch in Minkowski sum")
    if P.is_empty or Q.is_empty:
        return Polytope.empty(P.ambient_dim)
    sums = [tuple(a + b for a, b in zip(p, q)) for p in P.vertices for q in Q.vertices]
    return convex_hull(sums, P.ambient_dim)


def split_by_hyperplane(P: Polytope, xi: Sequence, c) -> tuple[Polytope, Polytope, Polytope]:
    """Exact split of P by the hyperplane <xi, x> = c.

    Returns (P inter {<= c}, P inter {>= c}, P inter {= c}); pieces missing
    the body come back as flagged empty polytopes, so that valuations can map
    them to the zero body.
    """
    if P.is_empty:
        e = Polytope.empty(P.ambient_dim)
        return e, e, e
    xi = tuple(Fraction(x) for x in xi)
    c = Fraction(c)
    vals = [dot(xi, v) for v in P.vertices]
    below = [v for v, f in zip(P.vertices, vals) if f <= c]
    above = [v for v, f in zip(P.vertices, vals) if f >= c]
    on = [v for v, f in zip(P.vertices, vals) if f == c]
    crossings = []
    for i, (u, fu) in enumerate(zip(P.vertices, vals)):
        for v, fv in list(zip(P.vertices, vals))[i + 1:]:
            if (fu < c < fv) or (fv < c < fu):
                t = (c - fu) / (fv - fu)
                crossings.append(tuple(a + t * (b - a) for a, b in zip(u, v)))
    dim = P.ambient_dim
    low = convex_hull(below + crossings, dim) if below or crossings else Polytope.empty(dim)
    high = convex_hull(above + crossings, dim) if above or crossings else Polytope.empty(dim)
    mid = convex_hull(on + crossings, dim) if on or crossings else Polytope.empty(dim)
    return low, high, mid
