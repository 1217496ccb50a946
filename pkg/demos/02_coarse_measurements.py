"""Coarse hyperbolic measurements: thin triangles, quasicenters, comparison
triangles, Hausdorff distance, quasigeodesic stability.

Run:  python3 demos/02_coarse_measurements.py
"""

import numpy as np

from hypext import (
    BallPoint,
    CurvatureScale,
    IdealPoint,
    K1,
    Triangle,
    comparison_report,
    geodesic_between,
    hausdorff_distance,
    quasicenter,
    quasigeodesic_deviation,
    thinness,
)
from hypext.maps import polar_warp


def ideal(deg):
    a = np.radians(deg)
    return IdealPoint([np.cos(a), np.sin(a)])


print("== thin triangles ==")
tri = Triangle(ideal(90), ideal(210), ideal(330))
val = thinness(tri)
print(f"ideal equilateral triangle thinness: {val:.9f}")
print(f"classical extreme ln(1 + sqrt 2)   : {np.log(1 + np.sqrt(2)):.9f}")
print(f"hyperbolicity ceiling log 3        : {np.log(3):.9f}")
k2 = CurvatureScale(2.0)
print(f"same triangle at curvature -4      : {thinness(tri, k2):.9f} (halved)")

print("\n== quasicenter ==")
center, radius = quasicenter(tri)
print(f"ideal equilateral: center {center.coords.round(8)}, C = {radius:.9f}")
print(f"(ln 3) / 2                                  = {np.log(3) / 2:.9f}")

print("\n== comparison triangles ==")
pts = [BallPoint(p) for p in ([0.4, 0.1], [-0.3, 0.35], [0.05, -0.5])]
rep = comparison_report(Triangle(*pts), k2)
print("measured angles        :", np.round(rep.angles, 6))
print("same-curvature angles  :", np.round(rep.comparison_angles_lambda, 6))
print("reference-curvature    :", np.round(rep.comparison_angles_one, 6))
print(f"midpoint distances ordered: {rep.corresponding_dist_lambda:.6f} "
      f"<= {rep.corresponding_dist_actual:.6f} <= {rep.corresponding_dist_one:.6f}")

print("\n== Hausdorff distance ==")
a = np.array([[0.0, 0.0]])
b = np.array([[0.5, 0.0]])
print(f"HD(origin, 0.5 e1) = {hausdorff_distance(K1, a, b):.9f} (ln 3)")

print("\n== quasigeodesic stability ==")
f = polar_warp(0.2, 1, 2)
u, v = np.array([1.0, 0.0]), np.array([-0.6, 0.8])
g = geodesic_between(IdealPoint(u), IdealPoint(v))
path = f.apply_raw(g.point_at_raw(np.linspace(-6, 6, 400)))
ia = IdealPoint(f.boundary_map().apply_raw(u[None, :])[0])
ib = IdealPoint(f.boundary_map().apply_raw(v[None, :])[0])
dev = quasigeodesic_deviation(path, ia, ib)
print(f"warped geodesic stays within {dev:.6f} of the straightened one")
