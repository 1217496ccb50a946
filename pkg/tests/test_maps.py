"""Map family tests: warp validity, declared quasiisometry constants,
boundary limits, jitter displacement bounds."""

import numpy as np
import pytest

from hypext.errors import GeometryError
from hypext.maps import (
    angle_warp,
    composite,
    identity_map,
    jittered_isometry,
    latitude_warp,
    mobius_boundary,
    mobius_map,
    polar_warp,
    translation_along_first_axis,
)
from hypext.model import CurvatureScale, _dist_raw
from hypext.sampling import rng_from, sample_ball_hyperbolic, sample_boundary

K2 = CurvatureScale(2.0)


def boundary_sample(seed, count, n):
    return sample_boundary(rng_from(seed), count, n)


class TestBoundaryMaps:
    def test_angle_warp_matches_circle_warp(self):
        h = angle_warp(0.2, 1, 2)
        theta = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
        us = np.stack([np.cos(theta), np.sin(theta)], axis=1)
        out = h.apply_raw(us)
        expected = theta + 0.2 * np.sin(theta)
        got = np.arctan2(out[:, 1], out[:, 0])
        assert np.max(np.abs(np.angle(np.exp(1j * (got - expected))))) < 1e-12

    def test_warp_parameters_validated(self):
        with pytest.raises(GeometryError):
            angle_warp(0.6, 2, 2)       # |a k| >= 1
        with pytest.raises(GeometryError):
            angle_warp(0.2, 0, 2)       # frequency must be >= 1
        with pytest.raises(GeometryError):
            latitude_warp(0.1, 1.5, 2)  # frequency must be integral

    @pytest.mark.parametrize("n", [2, 3])
    def test_images_stay_ideal_and_injective(self, n):
        us = boundary_sample(0, 1000, n)
        for h in (identity_map(n), angle_warp(0.2, 1, n), latitude_warp(0.15, 2, n),
                  mobius_boundary(translation_along_first_axis(1.0, n))):
            out = h.apply_raw(us)
            assert np.max(np.abs(np.linalg.norm(out, axis=1) - 1.0)) < 1e-9
            src = np.linalg.norm(us[:, None, :] - us[None, :, :], axis=-1)
            dst = np.linalg.norm(out[:, None, :] - out[None, :, :], axis=-1)
            separated = src > 1e-3
            assert np.min(dst[separated]) > 1e-8

    def test_composite_applies_in_order(self):
        h1 = angle_warp(0.2, 1, 2)
        iso = translation_along_first_axis(0.5, 2)
        h2 = mobius_boundary(iso)
        both = composite([h1, h2])
        us = boundary_sample(1, 50, 2)
        assert np.allclose(both.apply_raw(us), h2.apply_raw(h1.apply_raw(us)))
        assert both.declared_L == pytest.approx(h1.declared_L)

    def test_declared_constant_is_bilipschitz_constant(self):
        assert angle_warp(0.2, 1, 2).declared_L == pytest.approx(1.25)
        assert latitude_warp(0.15, 2, 3).declared_L == pytest.approx(1.0 / 0.7)


class TestInteriorMaps:
    @pytest.mark.parametrize("n", [2, 3])
    def test_declared_qi_constants_hold_on_samples(self, n):
        gen = rng_from(2)
        count = 10_000
        sample_a = sample_ball_hyperbolic(gen, count, n, 1.0, 6.0)
        sample_b = sample_ball_hyperbolic(gen, count, n, 1.0, 6.0)
        d0 = _dist_raw(1.0, sample_a, sample_b)
        iso = translation_along_first_axis(1.0, n)
        for f in (mobius_map(iso), polar_warp(0.2, 1, n),
                  jittered_isometry(iso, 0.3)):
            d1 = _dist_raw(1.0, f.apply_raw(sample_a), f.apply_raw(sample_b))
            lip, slack = f.declared_L, f.declared_A
            assert np.all(d1 <= lip * d0 + slack + 1e-9)
            assert np.all(d1 >= d0 / lip - slack - 1e-9)

    @pytest.mark.parametrize("n", [2, 3])
    def test_boundary_limit_agrees_with_declared_map(self, n):
        gen = rng_from(3)
        us = sample_boundary(gen, 200, n)
        deep = np.tanh(8.0) * us
        iso = translation_along_first_axis(1.0, n)
        for f in (mobius_map(iso), polar_warp(0.2, 1, n), polar_warp(0.15, 2, n),
                  jittered_isometry(iso, 0.3)):
            img = f.apply_raw(deep)
            dirs = img / np.linalg.norm(img, axis=1, keepdims=True)
            declared = f.boundary_map().apply_raw(us)
            assert np.max(np.linalg.norm(dirs - declared, axis=1)) < 1e-6

    def test_jitter_displacement_bounded_by_amplitude(self):
        gen = rng_from(4)
        iso = translation_along_first_axis(1.0, 2)
        base, jig = mobius_map(iso), jittered_isometry(iso, 0.3)
        pts = sample_ball_hyperbolic(gen, 3000, 2, 1.0, 5.0)
        disp = _dist_raw(1.0, base.apply_raw(pts), jig.apply_raw(pts))
        assert np.max(disp) <= 0.3 + 1e-12
        assert np.max(disp) > 0.25        # the bound is nearly attained

    def test_jitter_amplitude_validated(self):
        with pytest.raises(GeometryError):
            jittered_isometry(translation_along_first_axis(1.0, 2), 1.5)

    def test_polar_warp_fixes_radius(self):
        f = polar_warp(0.2, 1, 2)
        gen = rng_from(5)
        pts = sample_ball_hyperbolic(gen, 500, 2, 1.0, 4.0)
        out = f.apply_raw(pts)
        assert np.allclose(np.linalg.norm(out, axis=1), np.linalg.norm(pts, axis=1),
                           atol=1e-12)
