"""The boundary-driven extension map: build it, watch its laws hold, and
measure spans, continuity moduli, and the distance to a companion interior
quasiisometry.  Writes field.csv with a small extension field.

Run:  python3 demos/04_extension_map.py
"""

import numpy as np

from hypext import (
    BallPoint,
    ExtensionConfig,
    IdealPoint,
    compare_to_interior,
    continuity_modulus,
    extend,
    extension_field,
    projection_span,
)
from hypext.maps import (
    angle_warp,
    identity_map,
    jittered_isometry,
    mobius_boundary,
    mobius_map,
    polar_warp,
    translation_along_first_axis,
)
from hypext.sampling import rng_from, sample_ball_hyperbolic

cfg = ExtensionConfig(p=IdealPoint([-1.0, 0.0]))
x = BallPoint([0.3, 0.2])

print("== the extension fixes what it should ==")
print(f"identity map:    F(x) - x = "
      f"{np.linalg.norm(extend(identity_map(2), cfg, x).coords - x.coords):.2e}")
iso = translation_along_first_axis(1.0, 2)
img = extend(mobius_boundary(iso), cfg, BallPoint([0.0, 0.0]))
print(f"translation by 1: F(0) = {img.coords.round(9)}  "
      f"(tanh(1/2) = {np.tanh(0.5):.9f})")

print("\n== a genuinely warped boundary map ==")
warp = angle_warp(0.2, 1, 2)
span = projection_span(warp, cfg, x)
print(f"F(x) = {extend(warp, cfg, x).coords.round(6)}; "
      f"projected equator span = {span.length:.6f}")

print("\n== continuity moduli ==")
rows = continuity_modulus(warp, cfg, 5.0, [1e-3, 1e-2, 1e-1, 3e-1],
                          n_base=12, n_dirs=6, seed=0)
print("eps        omega      delta")
for eps, omega, delta in rows:
    print(f"{eps:<10.4g} {omega:<10.6f} {delta:<10.6f}")

print("\n== bounded distance from a companion interior map ==")
rng = rng_from(3)
pts = sample_ball_hyperbolic(rng, 150, 2, 1.0, 4.0)
print(f"sup d(F, f) for the polar warp pair : "
      f"{compare_to_interior(polar_warp(0.2, 1, 2), cfg, pts):.6f}")
print(f"sup d(F, f) for a mobius isometry   : "
      f"{compare_to_interior(mobius_map(iso), cfg, pts):.2e}")
print(f"sup d(F, f) for a 0.3-jittered copy : "
      f"{compare_to_interior(jittered_isometry(iso, 0.3), cfg, pts, h=mobius_boundary(iso)):.6f}")

grid = np.stack(np.meshgrid(np.linspace(-0.7, 0.7, 7),
                            np.linspace(-0.7, 0.7, 7), indexing="ij"), axis=-1)
grid = grid.reshape(-1, 2)
grid = grid[np.linalg.norm(grid, axis=1) < 0.95]
rows = extension_field(warp, cfg, grid)
with open("field.csv", "w") as fh:
    fh.write("x1,x2,F1,F2,t_x,span_length\n")
    for row in rows:
        fh.write(",".join(f"{v:.12g}" for v in row) + "\n")
print(f"\nwrote field.csv with {rows.shape[0]} grid rows")
