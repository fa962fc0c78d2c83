"""A tour of the exact polytope kernel.

Everything below prints exact rationals: hulls, support values, volumes,
area-measure atoms, and a hyperplane split whose volumes add up on the nose.
"""

from fractions import Fraction
from itertools import product

from minkval import convex_hull, split_by_hyperplane

F = Fraction

# The 4-cube, declared with a redundant interior point that the hull drops.
cube = convex_hull(list(product((0, 1), repeat=4)) + [(F(1, 2),) * 4])
print("cube vertices:", len(cube.vertices), "facets:", len(cube.facets))
print("cube volume:", cube.volume())
print("support of cube at (1,1,1,1):", cube.support((1, 1, 1, 1)))

# The standard 4-simplex and its exact data.
simplex = convex_hull(
    [(0, 0, 0, 0), (1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
)
print("\nsimplex volume (1/24 expected):", simplex.volume())
print("simplex facet normals:", sorted(f.normal for f in simplex.facets))

# Area measure: weighted outward normals; they always sum to zero.
atoms = simplex.area_measure()
print("\nsimplex area-measure atoms:")
for a in atoms:
    print("  ", tuple(str(x) for x in a))
print("closure sum:", tuple(str(x) for x in atoms.closure_sum()))

# Split the simplex by the hyperplane x1 = 1/2: volumes are exactly additive.
low, high, mid = split_by_hyperplane(simplex, (1, 0, 0, 0), F(1, 2))
print("\nsplit volumes:", low.volume(), "+", high.volume(), "=", simplex.volume())
assert low.volume() + high.volume() == simplex.volume()
print("slice is", mid.affine_dim, "dimensional with 4-volume", mid.volume())
