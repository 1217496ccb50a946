"""Visual metrics on the boundary sphere and quasisymmetry clouds.

Writes cloud.csv / cloud_fit.json next to the working directory.

Run:  python3 demos/03_visual_boundary.py
"""

import numpy as np

from hypext import BallPoint, IdealPoint, K1, VisualConfig, qs_cloud, visual_dist
from hypext.maps import angle_warp, identity_map, mobius_boundary, translation_along_first_axis
from hypext.visual import angle_visual_probe, qs_basepoints

origin_cfg = VisualConfig(BallPoint([0.0, 0.0]), K1)
e1 = IdealPoint([1.0, 0.0])
e2 = IdealPoint([0.0, 1.0])

print("== visual distances from the origin ==")
print(f"d_0(e1, -e1) = {visual_dist(origin_cfg, e1, IdealPoint([-1.0, 0.0])):.9f}")
print(f"d_0(e1,  e2) = {visual_dist(origin_cfg, e1, e2):.9f}  (sqrt 2 - 1 = "
      f"{np.sqrt(2) - 1:.9f})")

print("\n== angle bridge ==")
table = angle_visual_probe(origin_cfg, 2000, seed=0)
small = table[table[:, 0] < 0.05]
print(f"{len(small)} sampled pairs with visual distance < 0.05; "
      f"their largest visual angle is {small[:, 1].max():.4f} rad")

print("\n== quasisymmetry clouds ==")


def ideal(deg):
    a = np.radians(deg)
    return IdealPoint([np.cos(a), np.sin(a)])


p, q, r = ideal(10), ideal(140), ideal(260)
for h in (identity_map(2),
          mobius_boundary(translation_along_first_axis(1.0, 2)),
          angle_warp(0.2, 1, 2)):
    x, x_img = qs_basepoints(h, p, q, r)
    cloud = qs_cloud(h, VisualConfig(x), VisualConfig(x_img), 8000, seed=1)
    print(f"{h.label():24s} fitted envelope ratio <= {cloud.coeff:.4f} * t^{cloud.alpha:.4f} "
          f"(declared bilipschitz constant {h.declared_L:.3f})")

cloud.to_csv("cloud.csv")
cloud.fit_json("cloud_fit.json")
print("\nwrote cloud.csv and cloud_fit.json for the warp cloud")
