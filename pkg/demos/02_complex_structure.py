"""The complex structure on R^4: scalar action, determinant pairing, duality.

R^4 is read as C^2 via (x1, y1, x2, y2) <-> (x1 + i y1, x2 + i y2).  The
determinant form det(u, v) = u1 v2 - u2 v1 induces the duality map
u -> Re det(u, .) from W to W*, which intertwines the group actions up to a
factor of det(g).
"""

from itertools import product

from minkval import (
    ComplexMatrix2,
    Cplx,
    complex_scale,
    convex_hull,
    det_duality,
    det_duality_inverse,
    det_image,
    det_pair,
    dual_action,
    dual_scalar_scale,
    group_action,
)

cube = convex_hull(list(product((0, 1), repeat=4)))

# Multiplication by i rotates each complex coordinate plane by 90 degrees.
rotated = complex_scale(Cplx.of(0, 1), cube)
print("i * cube vertices sample:", [tuple(str(x) for x in v) for v in rotated.vertices[:2]])

# The determinant pairing on basis vectors.
e1, e2 = (1, 0, 0, 0), (0, 0, 1, 0)
print("det(e1, e2) =", det_pair(e1, e2))
print("det(e2, e1) =", det_pair(e2, e1))

# det_image projects a 4-dimensional body to a planar one in C.
planar = det_image(cube, e2)
print("det(cube, e2) is the planar body with vertices:",
      [tuple(str(x) for x in v) for v in planar.vertices])

# The duality map is an exact linear bijection W -> W*.
dual_cube = det_duality(cube)
print("duality round trip ok:", det_duality_inverse(dual_cube) == cube)

# Equivariance: Phi(g K) = det(g) . g^{-*} Phi(K), exactly.
g = ComplexMatrix2.shear_upper(Cplx.of(1, 1)) @ ComplexMatrix2.diagonal(
    Cplx.of(2), Cplx.of(1, 0) / Cplx.of(2)
)
left = det_duality(group_action(g, cube))
right = dual_scalar_scale(g.det(), dual_action(g, det_duality(cube)))
print("duality equivariance holds:", left.body == right.body)
