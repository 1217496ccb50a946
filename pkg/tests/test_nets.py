"""Decomposition tests: colorings, incidence graphs, separated nets, and
bilipschitz restriction estimates."""

import itertools

import numpy as np
import pytest

from hypext.errors import GeometryError
from hypext.maps import jittered_isometry, mobius_map, polar_warp, translation_along_first_axis
from hypext.model import K1, _dist_raw, _mobius_add
from hypext.nets import (
    Coloring,
    Graph,
    greedy_color,
    greedy_net,
    incidence_graph,
    net_bilipschitz_estimate,
    read_edge_list,
    write_coloring,
    write_edge_list,
)


class TestGreedyColor:
    def test_path_graph(self):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        c = greedy_color(g)
        assert c.is_proper_for(g)
        assert c.n_colors == 2

    def test_complete_graph(self):
        g = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, 5)])
        c = greedy_color(g)
        assert c.is_proper_for(g)
        assert c.n_colors == 5 == g.max_degree + 1

    def test_random_bounded_degree(self):
        gen = np.random.default_rng(0)
        for _ in range(40):
            verts = int(gen.integers(2, 40))
            edges = set()
            deg = [0] * verts
            for _ in range(verts * 7):
                u, v = map(int, gen.integers(0, verts, 2))
                if u == v or deg[u] >= 7 or deg[v] >= 7 or (min(u, v), max(u, v)) in edges:
                    continue
                edges.add((min(u, v), max(u, v)))
                deg[u] += 1
                deg[v] += 1
            g = Graph.from_edges(verts, edges)
            c = greedy_color(g)
            assert c.is_proper_for(g)
            assert c.n_colors <= g.max_degree + 1

    def test_exhaustive_small_graphs(self):
        for verts in range(6):
            pairs = list(itertools.combinations(range(verts), 2))
            for mask in range(1 << len(pairs)):
                edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
                g = Graph.from_edges(verts, edges)
                c = greedy_color(g)
                assert c.is_proper_for(g)
                assert c.n_colors <= g.max_degree + 1

    def test_self_loop_rejected(self):
        with pytest.raises(GeometryError):
            Graph.from_edges(3, [(1, 1)])


class TestIncidenceGraph:
    def test_far_singletons_not_adjacent(self):
        g = incidence_graph([np.array([[0.0, 0.0]]), np.array([[0.7, 0.0]])], 0.1)
        assert list(g.edges()) == []

    def test_identical_sets_adjacent(self):
        pts = np.array([[0.1, 0.2], [0.0, -0.1]])
        g = incidence_graph([pts, pts.copy()], 1e-9)
        assert list(g.edges()) == [(0, 1)]

    def test_hexagonal_tangency(self):
        # center disk of hyperbolic radius r plus six neighbors tangent to it;
        # sample sets include the exact tangency points
        r = 0.4
        theta = np.linspace(0.0, 2.0 * np.pi, 96, endpoint=False)
        ring = np.tanh(r / 2.0) * np.stack([np.cos(theta), np.sin(theta)], axis=1)
        sets = []
        contacts = []
        for j in range(6):
            ang = np.pi * j / 3.0
            d = np.array([np.cos(ang), np.sin(ang)])
            contact = np.tanh(r / 2.0) * d
            petal = _mobius_add(np.tanh(r) * d, ring)
            sets.append(np.vstack([petal, contact]))
            contacts.append(contact)
        center = np.vstack([ring] + contacts)
        g = incidence_graph([center] + sets, 1e-6, K1)
        assert len(g.adjacency[0]) == 6
        assert all(len(g.adjacency[i]) == 1 for i in range(1, 7))

    def test_empty_member_rejected(self):
        with pytest.raises(GeometryError):
            incidence_graph([np.zeros((0, 2))], 0.1)


class TestGreedyNet:
    def test_oversized_separation_gives_single_point(self):
        net = greedy_net(2.0, 50.0, n=2, seed=0)
        assert net.points.shape[0] == 1

    def test_net_inequalities(self):
        net = greedy_net(3.0, 0.5, n=2, seed=1)
        d = _dist_raw(1.0, net.points[:, None, :], net.points[None, :, :])
        iu = np.triu_indices(net.points.shape[0], 1)
        assert d[iu].min() >= 0.5
        assert net.covering_radius <= 0.5 + 0.1

    def test_determinism(self):
        a = greedy_net(3.0, 0.5, n=2, seed=7)
        b = greedy_net(3.0, 0.5, n=2, seed=7)
        assert np.array_equal(a.points, b.points)

    def test_desk_scale_guard(self):
        with pytest.raises(GeometryError):
            greedy_net(20.0, 0.5)


class TestNetBilipschitz:
    def test_isometry_gives_unit_ratios(self):
        net = greedy_net(3.0, 0.5, n=2, seed=2)
        lo, hi = net_bilipschitz_estimate(mobius_map(translation_along_first_axis(0.7, 2)), net)
        assert lo == pytest.approx(1.0, abs=1e-9)
        assert hi == pytest.approx(1.0, abs=1e-9)

    def test_jitter_on_coarse_net(self):
        net = greedy_net(4.0, 2.0, n=2, seed=3)
        f = jittered_isometry(translation_along_first_axis(0.7, 2), 0.3)
        lo, hi = net_bilipschitz_estimate(f, net)
        # displacement 0.3 against separation 2 brackets the ratios
        assert lo >= 0.7 - 1e-9
        assert hi <= 1.3 + 1e-9

    def test_warp_positive_bounds(self):
        net = greedy_net(4.0, 1.0, n=2, seed=4)
        lo, hi = net_bilipschitz_estimate(polar_warp(0.2, 1, 2), net)
        assert 0.0 < lo <= hi < np.inf

    def test_singleton_rejected(self):
        net = greedy_net(2.0, 50.0, n=2, seed=5)
        with pytest.raises(GeometryError):
            net_bilipschitz_estimate(mobius_map(translation_along_first_axis(0.7, 2)), net)


class TestFileFormats:
    def test_edge_list_roundtrip(self, tmp_path):
        g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
        path = tmp_path / "graph.txt"
        write_edge_list(g, path)
        again = read_edge_list(path)
        assert sorted(again.edges()) == sorted(g.edges())

    def test_coloring_json(self, tmp_path):
        c = Coloring(colors=[1, 2, 1], n_colors=2)
        path = tmp_path / "colors.json"
        write_coloring(c, path)
        assert path.read_text() == "[1, 2, 1]"
