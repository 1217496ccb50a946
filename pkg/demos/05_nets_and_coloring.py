"""Combinatorial pieces: incidence graphs, first-fit colorings, separated
nets, and bilipschitz restriction of quasiisometries to nets.

Run:  python3 demos/05_nets_and_coloring.py
"""

import numpy as np

from hypext import (
    Graph,
    K1,
    greedy_color,
    greedy_net,
    incidence_graph,
    net_bilipschitz_estimate,
)
from hypext.maps import jittered_isometry, mobius_map, polar_warp, translation_along_first_axis
from hypext.model import _mobius_add

print("== first-fit coloring ==")
petersen = Graph.from_edges(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
])
coloring = greedy_color(petersen)
print(f"Petersen graph: {coloring.n_colors} colors "
      f"(max degree + 1 = {petersen.max_degree + 1}), proper: "
      f"{coloring.is_proper_for(petersen)}")

print("\n== incidence graph of a tangent disk flower ==")
r = 0.4
theta = np.linspace(0, 2 * np.pi, 96, endpoint=False)
ring = np.tanh(r / 2) * np.stack([np.cos(theta), np.sin(theta)], axis=1)
sets = [ring]
for j in range(6):
    ang = np.pi * j / 3
    d = np.array([np.cos(ang), np.sin(ang)])
    petal = _mobius_add(np.tanh(r) * d, ring)
    sets.append(np.vstack([petal, np.tanh(r / 2) * d]))
sets[0] = np.vstack([ring] + [np.tanh(r / 2) * np.array([np.cos(np.pi * j / 3),
                                                         np.sin(np.pi * j / 3)])
                              for j in range(6)])
flower = incidence_graph(sets, 1e-6, K1)
print(f"center disk touches {len(flower.adjacency[0])} petals; "
      f"coloring uses {greedy_color(flower).n_colors} colors")

print("\n== separated nets ==")
net = greedy_net(3.0, 0.5, n=2, seed=0)
print(f"net of the radius-3 ball at separation 0.5: {net.points.shape[0]} points, "
      f"covering radius {net.covering_radius:.4f}")

print("\n== bilipschitz restriction to a coarse net ==")
coarse_net = greedy_net(4.0, 2.0, n=2, seed=1)
iso = translation_along_first_axis(0.7, 2)
for f in (mobius_map(iso), jittered_isometry(iso, 0.3), polar_warp(0.2, 1, 2)):
    lo, hi = net_bilipschitz_estimate(f, coarse_net)
    print(f"{f.label():24s} distance ratios in [{lo:.4f}, {hi:.4f}]")
