"""Tour of the ball model: distances, geodesics, the exponential map,
angles, and Mobius normalization.

Run:  python3 demos/01_model_tour.py
"""

import numpy as np

from hypext import (
    BallPoint,
    CurvatureScale,
    IdealPoint,
    K1,
    TangentVector,
    angle,
    apply_mobius,
    exp_map,
    geodesic_between,
    hyp_dist,
    log_map,
    normalize_to_diameter,
    ray_limit,
    right_triangle_residual,
)

origin = BallPoint([0.0, 0.0])
halfway = BallPoint([0.5, 0.0])

print("== distances ==")
print(f"d(0, 0.5 e1) at curvature -1:  {hyp_dist(K1, origin, halfway):.12f}")
print(f"ln 3                        :  {np.log(3.0):.12f}")
k2 = CurvatureScale(2.0)
print(f"same pair at curvature -4   :  {hyp_dist(k2, origin, halfway):.12f}  (halved)")

print("\n== geodesics ==")
quarter = geodesic_between(IdealPoint([1.0, 0.0]), IdealPoint([0.0, 1.0]))
print(f"arc between e1 and e2 has anchor {quarter.anchor.coords.round(6)}")
print(f"unit speed check: d(c(0.3), c(1.1)) = "
      f"{hyp_dist(K1, quarter.point_at(0.3), quarter.point_at(1.1)):.9f} (expect 0.8)")

print("\n== exponential map ==")
x = BallPoint([0.3, -0.2])
v = TangentVector(x, [0.05, 0.12])
y = exp_map(x, v)
print(f"|v| hyperbolic = {v.hyp_norm(K1):.9f};  d(x, exp_x v) = {hyp_dist(K1, x, y):.9f}")
back = log_map(x, y)
print(f"log roundtrip error = {np.linalg.norm(back.vec - v.vec):.2e}")

print("\n== rays and angles ==")
lim = ray_limit(BallPoint([0.3, 0.0]), TangentVector(BallPoint([0.3, 0.0]), [0.0, 1.0]))
print(f"vertical ray from 0.3 e1 lands at {lim.direction.round(6)}")
print(f"angle at origin between e1- and e2-radii: "
      f"{angle(origin, BallPoint([0.5, 0]), BallPoint([0, 0.5])):.9f} (pi/2)")

print("\n== right-triangle identity ==")
c = origin
leg = exp_map(c, TangentVector(c, [1.0 * 0.5, 0.0]))
other = exp_map(c, TangentVector(c, [0.0, 1.0 * 0.5]))
res = right_triangle_residual(K1, leg, other, c)
print(f"cosh(a) sin(B) - cos(A) = {res:.2e} for unit legs at the origin")

print("\n== Mobius normalization ==")
g = geodesic_between(BallPoint([0.2, 0.5]), IdealPoint([-0.6, -0.8]))
iso = normalize_to_diameter(g)
moved = iso.apply_interior_raw(g.anchor.coords)
print(f"anchor maps to {moved.round(12)} (origin)")
pair = (BallPoint([0.1, 0.3]), BallPoint([-0.4, 0.2]))
before = hyp_dist(K1, *pair)
after = hyp_dist(K1, apply_mobius(iso, pair[0]), apply_mobius(iso, pair[1]))
print(f"distance preserved: {before:.12f} -> {after:.12f}")
