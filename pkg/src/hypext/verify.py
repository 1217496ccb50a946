"""Check registry: every quantitative property the library promises, run at
configurable sample counts and reported as machine-readable records.

Each check returns a CheckResult carrying the measured statistic, the
threshold it is held to, and the anchor id of the property catalog entry it
implements.  The CLI ``verify`` command runs the whole registry; the
acceptance test suite runs the flagship checks at their full default counts.
"""

import time
from dataclasses import dataclass, field

import numpy as np

from . import coarse, extension, nets, visual
from .coarse import (
    Triangle,
    comparison_report,
    orthogonal_project,
    quasicenter,
    thinness_batch,
)
from .extension import (
    ExtensionConfig,
    boundary_bounds_check,
    compare_to_interior,
    continuity_modulus,
    extend,
    projection_span,
    q_of,
)
from .maps import (
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
from .model import (
    BallPoint,
    CurvatureScale,
    IdealPoint,
    K1,
    MobiusIsometry,
    TangentVector,
    _dist_raw,
    _mobius_add,
    angle,
    apply_mobius,
    exp_map,
    geodesic_between,
    hyp_dist,
    log_map,
    ray_limit,
    right_triangle_residual,
    rotation_taking,
)
from .sampling import rng_from, sample_ball_euclidean, sample_ball_hyperbolic, sample_boundary
from .visual import VisualConfig, qs_basepoints, qs_cloud, visual_dist_many

LOG3 = float(np.log(3.0))
LN_1_SQRT2 = float(np.log(1.0 + np.sqrt(2.0)))
SQRT2_M1 = float(np.sqrt(2.0) - 1.0)


@dataclass
class CheckResult:
    check_id: str
    anchor: str
    samples: int
    measured: float
    threshold: float
    passed: bool
    seconds: float
    direction: str = "max<=thr"
    detail: dict = field(default_factory=dict)

    def row(self) -> dict:
        return {
            "id": self.check_id,
            "anchor": self.anchor,
            "samples": self.samples,
            "measured": self.measured,
            "threshold": self.threshold,
            "direction": self.direction,
            "pass": self.passed,
            "seconds": round(self.seconds, 3),
            **({"detail": self.detail} if self.detail else {}),
        }


@dataclass
class VerifyConfig:
    seed: int = 7
    scale: float = 1.0

    def count(self, default: int, minimum: int = 8) -> int:
        return max(int(round(default * self.scale)), minimum)

    @property
    def low_power(self) -> bool:
        return self.scale < 1.0


def _timer():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start


def _random_rotation(rng, n):
    u = sample_boundary(rng, 1, n)[0]
    v = sample_boundary(rng, 1, n)[0]
    return rotation_taking(u, v)


def _random_isometry(rng, n, max_shift=0.7):
    shift = sample_ball_euclidean(rng, 1, n, max_shift)[0]
    return (MobiusIsometry.translation(shift)
            .then(MobiusIsometry.rotation(_random_rotation(rng, n))))


def _builtin_boundary_maps(n):
    iso = translation_along_first_axis(1.0, n)
    parts = [angle_warp(0.2, 1, n), mobius_boundary(iso)]
    return [
        identity_map(n),
        mobius_boundary(iso),
        angle_warp(0.2, 1, n),
        latitude_warp(0.15, 2, n),
        composite(parts),
    ]


def _ref_ideal(n):
    v = np.zeros(n)
    v[0] = -1.0
    return IdealPoint(v)


# ---------------------------------------------------------------------------
# model checks
# ---------------------------------------------------------------------------

def check_trig_identity(cfg: VerifyConfig) -> CheckResult:
    """Right-triangle identity cosh(lam a) sin B = cos A."""
    el = _timer()
    rng = rng_from(cfg.seed)
    total = cfg.count(10_000, 30)
    lams = (1.0, 1.5, 2.0)
    per = total // len(lams)
    worst = 0.0
    for lam in lams:
        k = CurvatureScale(lam)
        for _ in range(per):
            n = int(rng.integers(2, 4))
            c = BallPoint(sample_ball_euclidean(rng, 1, n, 0.75)[0])
            d1 = sample_boundary(rng, 1, n)[0]
            d2 = sample_boundary(rng, 1, n)[0]
            d2 -= (d2 @ d1) * d1
            d2 /= np.linalg.norm(d2)
            la, lb = rng.uniform(0.05, 2.5, 2)
            conf = k.lam * (1.0 - c.coords @ c.coords) / 2.0
            va = exp_map(c, TangentVector(c, d1 * la * conf), k)
            vb = exp_map(c, TangentVector(c, d2 * lb * conf), k)
            worst = max(worst, abs(right_triangle_residual(k, va, vb, c)))
    return CheckResult("trig_identity", "trig_identity", per * len(lams), worst,
                       1e-9, worst < 1e-9, el())


def check_metric_axioms(cfg: VerifyConfig) -> CheckResult:
    """Symmetry (exact) and triangle inequality on random triples."""
    el = _timer()
    rng = rng_from(cfg.seed + 1)
    total = cfg.count(10_000, 50)
    worst = 0.0
    for n in (2, 3):
        for lam in (1.0, 2.0):
            cnt = total // 4
            a = sample_ball_hyperbolic(rng, cnt, n, lam, 6.0)
            b = sample_ball_hyperbolic(rng, cnt, n, lam, 6.0)
            c = sample_ball_hyperbolic(rng, cnt, n, lam, 6.0)
            dab = _dist_raw(lam, a, b)
            dba = _dist_raw(lam, b, a)
            dac = _dist_raw(lam, a, c)
            dcb = _dist_raw(lam, c, b)
            worst = max(worst, float(np.max(np.abs(dab - dba))))
            worst = max(worst, float(np.max(dab - (dac + dcb))))
    return CheckResult("metric_axioms", "model_metric", total, worst,
                       1e-9, worst < 1e-9, el())


def check_lambda_scaling(cfg: VerifyConfig) -> CheckResult:
    """Distance at scale lam equals the reference distance divided by lam."""
    el = _timer()
    rng = rng_from(cfg.seed + 2)
    total = cfg.count(5_000, 50)
    worst = 0.0
    for n in (2, 3):
        a = sample_ball_euclidean(rng, total // 2, n, 0.95)
        b = sample_ball_euclidean(rng, total // 2, n, 0.95)
        base = _dist_raw(1.0, a, b)
        for lam in (1.5, 2.0, 3.0):
            worst = max(worst, float(np.max(np.abs(_dist_raw(lam, a, b) * lam - base))))
    return CheckResult("lambda_scaling", "model_metric", total, worst,
                       1e-12, worst < 1e-12, el())


def check_convexity(cfg: VerifyConfig) -> CheckResult:
    """Distance between geodesics is convex; nonincreasing when the forward
    endpoints agree."""
    el = _timer()
    rng = rng_from(cfg.seed + 3)
    trials = cfg.count(800, 12)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 4))
        lam = float(rng.choice([1.0, 2.0]))
        k = CurvatureScale(lam)
        us = sample_boundary(rng, 4, n)
        if min(np.linalg.norm(us[0] - us[1]), np.linalg.norm(us[2] - us[3])) < 1e-3:
            continue
        g1 = geodesic_between(IdealPoint(us[0]), IdealPoint(us[1]), k)
        g2 = geodesic_between(IdealPoint(us[2]), IdealPoint(us[3]), k)
        t = np.sort(rng.uniform(-4.0, 4.0, 2))
        f = lambda s: float(_dist_raw(lam, g1.point_at_raw(np.asarray(s)),
                                      g2.point_at_raw(np.asarray(s))))
        mid = 0.5 * (t[0] + t[1])
        worst = max(worst, f(mid) - 0.5 * (f(t[0]) + f(t[1])))
        # shared forward endpoint: distance must not increase
        g3 = geodesic_between(IdealPoint(us[2]), IdealPoint(us[1]), k)
        if np.linalg.norm(us[2] - us[1]) > 1e-3:
            s0 = float(rng.uniform(-3.0, 3.0))
            s1 = s0 + float(rng.uniform(0.1, 3.0))
            d0 = float(_dist_raw(lam, g1.point_at_raw(np.asarray(s0)),
                                 g3.point_at_raw(np.asarray(s0))))
            d1 = float(_dist_raw(lam, g1.point_at_raw(np.asarray(s1)),
                                 g3.point_at_raw(np.asarray(s1))))
            worst = max(worst, d1 - d0)
    return CheckResult("convexity", "distance_convexity", trials, worst,
                       1e-8, worst < 1e-8, el())


def check_exp_log_roundtrip(cfg: VerifyConfig) -> CheckResult:
    el = _timer()
    rng = rng_from(cfg.seed + 4)
    trials = cfg.count(2_000, 20)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 4))
        lam = float(rng.choice([1.0, 1.5, 2.0]))
        k = CurvatureScale(lam)
        x = BallPoint(sample_ball_euclidean(rng, 1, n, 0.9)[0])
        vec = rng.normal(size=n) * 0.2 * (1.0 - np.linalg.norm(x.coords))
        if np.linalg.norm(vec) < 1e-12:
            continue
        v = TangentVector(x, vec)
        back = log_map(x, exp_map(x, v, k), k)
        worst = max(worst, float(np.linalg.norm(back.vec - v.vec)))
        worst = max(worst, abs(hyp_dist(k, x, exp_map(x, v, k)) - v.hyp_norm(k)))
    return CheckResult("exp_log_roundtrip", "exponential_map", trials, worst,
                       1e-9, worst < 1e-9, el())


def check_ray_limit_homeo(cfg: VerifyConfig) -> CheckResult:
    """Direction-to-boundary map is injective and hits a dense boundary sample."""
    el = _timer()
    rng = rng_from(cfg.seed + 5)
    trials = cfg.count(400, 8)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 4))
        x = BallPoint(sample_ball_euclidean(rng, 1, n, 0.9)[0])
        d1, d2 = sample_boundary(rng, 2, n)
        if np.linalg.norm(d1 - d2) < 1e-3:
            continue
        u1 = ray_limit(x, TangentVector(x, d1))
        u2 = ray_limit(x, TangentVector(x, d2))
        if np.linalg.norm(u1.direction - u2.direction) < 1e-8:
            worst = max(worst, 1.0)
        # constructive surjectivity: invert and shoot back
        target = sample_boundary(rng, 1, n)[0]
        w = _mobius_add(-x.coords, target)
        again = ray_limit(x, TangentVector(x, w / np.linalg.norm(w)))
        worst = max(worst, float(np.linalg.norm(again.direction - target)))
    return CheckResult("ray_limit_homeo", "direction_boundary_homeo", trials, worst,
                       1e-9, worst < 1e-9, el())


def check_mobius_isometry(cfg: VerifyConfig) -> CheckResult:
    el = _timer()
    rng = rng_from(cfg.seed + 6)
    trials = cfg.count(2_000, 20)
    worst = 0.0
    for _ in range(trials):
        n = int(rng.integers(2, 4))
        lam = float(rng.choice([1.0, 2.0]))
        k = CurvatureScale(lam)
        iso = _random_isometry(rng, n)
        x = BallPoint(sample_ball_euclidean(rng, 1, n, 0.9)[0])
        y = BallPoint(sample_ball_euclidean(rng, 1, n, 0.9)[0])
        worst = max(worst, abs(hyp_dist(k, apply_mobius(iso, x), apply_mobius(iso, y))
                               - hyp_dist(k, x, y)))
        u = IdealPoint(sample_boundary(rng, 1, n)[0])
        worst = max(worst, abs(np.linalg.norm(apply_mobius(iso, u).direction) - 1.0))
    return CheckResult("mobius_isometry", "model_isometries", trials, worst,
                       1e-9, worst < 1e-9, el())


# ---------------------------------------------------------------------------
# coarse checks
# ---------------------------------------------------------------------------

def _random_triangles(rng, count, n, lam, ideal_prob=0.4, radius=5.0):
    """Vertex coordinates and ideal flags for random triangles.

    Ideal vertex pairs are kept 3e-3 apart (chordal): slivers between nearer
    ideal points live deeper than float64 can chart, so their thinness is
    not measurable honestly.
    """
    flags = rng.uniform(size=(count, 3)) < ideal_prob
    boundary = sample_boundary(rng, count * 3, n).reshape(count, 3, n)
    interior = sample_ball_hyperbolic(rng, count * 3, n, lam, radius).reshape(count, 3, n)
    coords = np.where(flags[:, :, None], boundary, interior)
    for _ in range(16):
        bad = np.zeros(count, dtype=bool)
        for i, j in ((0, 1), (1, 2), (2, 0)):
            sep = np.linalg.norm(coords[:, i] - coords[:, j], axis=1)
            both_ideal = flags[:, i] & flags[:, j]
            same_kind = flags[:, i] == flags[:, j]
            bad |= np.where(both_ideal, sep < 3e-3, same_kind & (sep < 1e-6))
        if not np.any(bad):
            break
        idx = np.nonzero(bad)[0]
        coords[idx, 0] = np.where(flags[idx, 0][:, None],
                                  sample_boundary(rng, idx.size, n),
                                  sample_ball_hyperbolic(rng, idx.size, n, lam, radius))
    return coords, flags


def check_delta_log3(cfg: VerifyConfig) -> CheckResult:
    """Thinness of random (interior and truncated-ideal) triangles stays
    below the hyperbolicity constant log 3."""
    el = _timer()
    rng = rng_from(cfg.seed + 10)
    total = cfg.count(100_000, 40)
    per = total // 4
    worst = 0.0
    for lam in (1.0, 2.0):
        k = CurvatureScale(lam)
        for n in (2, 3):
            coords, flags = _random_triangles(rng, per, n, lam)
            vals = thinness_batch(coords, flags, k)
            worst = max(worst, float(np.max(vals)))
    thr = LOG3 + 1e-3
    return CheckResult("delta_log3", "delta_log3", per * 4, worst, thr,
                       worst <= thr, el())


def _admissible_angle_config(rng, n, min_angle, ideal_prob=0.5, radius=3.0):
    """x plus two closure points seen from x at an angle >= min_angle."""
    x = BallPoint(sample_ball_hyperbolic(rng, 1, n, 1.0, radius)[0])
    d1 = sample_boundary(rng, 1, n)[0]
    d2 = sample_boundary(rng, 1, n)[0]
    d2 -= (d2 @ d1) * d1
    nrm = np.linalg.norm(d2)
    if nrm < 1e-9:
        return None
    d2 /= nrm
    phi = rng.uniform(min_angle, np.pi * 0.98)
    dir2 = np.cos(phi) * d1 + np.sin(phi) * d2

    def endpoint(d):
        if rng.uniform() < ideal_prob:
            return ray_limit(x, TangentVector(x, d))
        reach = float(rng.uniform(0.3, 6.0))
        conf = (1.0 - x.coords @ x.coords) / 2.0
        return exp_map(x, TangentVector(x, d * reach * conf), K1)

    return x, endpoint(d1), endpoint(dir2), phi


def check_lemma_2_4_bound(cfg: VerifyConfig) -> CheckResult:
    """Obtuse-or-right vertex: distance to the far side is uniformly small,
    with the symmetric ideal right angle as the extreme case."""
    el = _timer()
    rng = rng_from(cfg.seed + 11)
    total = cfg.count(10_000, 30)
    worst = 0.0
    made = 0
    while made < total:
        got = _admissible_angle_config(rng, int(rng.integers(2, 4)), np.pi / 2.0)
        if got is None:
            continue
        x, y, z, _ = got
        try:
            g = geodesic_between(y, z, K1)
        except Exception:
            continue
        worst = max(worst, hyp_dist(K1, x, orthogonal_project(x, g)))
        made += 1
    # symmetric ideal attainment
    e1 = np.array([1.0, 0.0])
    e2 = np.array([0.0, 1.0])
    attained = hyp_dist(K1, BallPoint([0.0, 0.0]),
                        orthogonal_project(BallPoint([0.0, 0.0]),
                                           geodesic_between(IdealPoint(e1), IdealPoint(e2))))
    att_err = abs(attained - LN_1_SQRT2)
    # Hausdorff clause on a smaller sample
    hd_worst = 0.0
    for _ in range(cfg.count(300, 6)):
        got = _admissible_angle_config(rng, int(rng.integers(2, 4)), np.pi / 2.0,
                                       ideal_prob=0.5)
        if got is None:
            continue
        x, y, z, _ = got
        try:
            tri = Triangle(x, y, z)
        except Exception:
            continue
        sides = coarse._sides(tri, K1)
        far = sides[1]           # side yz
        legs = (sides[0], sides[2])
        pts, _ = far.sample_world(256)
        to_far = np.minimum(legs[0].dist_from_world(pts), legs[1].dist_from_world(pts))
        hd_worst = max(hd_worst, float(np.max(to_far)))
        for leg in legs:
            lp, _ = leg.sample_world(256)
            hd_worst = max(hd_worst, float(np.max(far.dist_from_world(lp))))
    thr = LN_1_SQRT2 + 1e-3
    ok = worst <= thr and att_err <= 1e-6 and hd_worst <= thr
    return CheckResult("lemma_2_4_bound", "lemma_2_4", total, worst, thr, ok, el(),
                       detail={"attainment_error": att_err, "hausdorff_sup": hd_worst})


def _thick_base_config(rng, min_angle, max_reach):
    """x, y at distance >= 1 plus a cone direction making the angle at x
    land in [min_angle, pi); the partner angle at y still needs checking."""
    x = BallPoint(sample_ball_hyperbolic(rng, 1, 2, 1.0, 3.0)[0])
    d = sample_boundary(rng, 1, 2)[0]
    reach = float(rng.uniform(1.0, max_reach))
    conf = (1.0 - x.coords @ x.coords) / 2.0
    y = exp_map(x, TangentVector(x, d * reach * conf))
    w = np.array([-d[1], d[0]]) * (1.0 if rng.uniform() < 0.5 else -1.0)
    alpha = float(rng.uniform(min_angle, np.pi * 0.7))
    cone = np.cos(alpha) * d + np.sin(alpha) * w
    return x, y, cone


def check_lemma_2_1_gap(cfg: VerifyConfig) -> CheckResult:
    """Angle sum of thick-base triangles stays boundedly below pi."""
    el = _timer()
    rng = rng_from(cfg.seed + 12)
    total = cfg.count(5_000, 30)
    floor = np.pi / 4.0
    best_sum = 0.0
    made = 0
    attempts = 0
    while made < total and attempts < 100 * total:
        attempts += 1
        x, y, cone = _thick_base_config(rng, floor, 5.0)
        if rng.uniform() < 0.5:
            reach_z = float(rng.uniform(0.5, 5.0))
            conf = (1.0 - x.coords @ x.coords) / 2.0
            zc = exp_map(x, TangentVector(x, cone * reach_z * conf))
        else:
            zc = ray_limit(x, TangentVector(x, cone))
        ax = angle(x, y, zc)
        ay = angle(y, x, zc)
        if ax < floor or ay < floor:
            continue
        best_sum = max(best_sum, ax + ay)
        made += 1
    gap = np.pi - best_sum
    return CheckResult("lemma_2_1_gap", "lemma_2_1", made, gap, 0.0,
                       gap > 0.0, el(), direction="measured>thr",
                       detail={"empirical_gap": gap})


def check_lemma_2_2_gap(cfg: VerifyConfig) -> CheckResult:
    """Same gap with the far vertex replaced by a shared ideal point.

    Both base angles >= 3 pi / 8 force cosh(lam d(x, y)) <= 1.344, so the
    separation floor is 0.5 here (the floor 1.0 would make the hypothesis
    set empty and the check vacuous).
    """
    el = _timer()
    rng = rng_from(cfg.seed + 13)
    total = cfg.count(5_000, 30)
    floor = 3.0 * np.pi / 8.0
    best_sum = 0.0
    made = 0
    attempts = 0
    while made < total and attempts < 200 * total:
        attempts += 1
        x = BallPoint(sample_ball_hyperbolic(rng, 1, 2, 1.0, 3.0)[0])
        d = sample_boundary(rng, 1, 2)[0]
        reach = float(rng.uniform(0.5, 0.81))
        conf = (1.0 - x.coords @ x.coords) / 2.0
        y = exp_map(x, TangentVector(x, d * reach * conf))
        w = np.array([-d[1], d[0]]) * (1.0 if rng.uniform() < 0.5 else -1.0)
        alpha = float(rng.uniform(floor, 0.55 * np.pi))
        xi = ray_limit(x, TangentVector(x, np.cos(alpha) * d + np.sin(alpha) * w))
        ay = angle(y, x, xi)
        if ay < floor:
            continue
        best_sum = max(best_sum, angle(x, y, xi) + ay)
        made += 1
    gap = np.pi - best_sum
    ok = made >= max(total // 4, 1) and gap > 0.0
    return CheckResult("lemma_2_2_gap", "lemma_2_2", made, gap, 0.0,
                       ok, el(), direction="measured>thr",
                       detail={"empirical_gap": gap, "separation_floor": 0.5})


def check_lemma_2_3_small_angle(cfg: VerifyConfig) -> CheckResult:
    """Visual angle of a short segment shrinks monotonically with its length."""
    el = _timer()
    rng = rng_from(cfg.seed + 14)
    pool = cfg.count(2_000, 20)
    s_grid = np.array([1e-3, 3e-3, 1e-2, 3e-2, 1e-1, 3e-1])
    sups = np.zeros_like(s_grid)
    made = 0
    while made < pool:
        n = int(rng.integers(2, 4))
        x = BallPoint(sample_ball_hyperbolic(rng, 1, n, 1.0, 3.0)[0])
        d = sample_boundary(rng, 1, n)[0]
        zdir = sample_boundary(rng, 1, n)[0]
        reach = float(rng.uniform(1.0, 4.0))
        conf = (1.0 - x.coords @ x.coords) / 2.0
        z = exp_map(x, TangentVector(x, zdir * reach * conf))
        frac = float(rng.uniform(0.2, 1.0))
        for i, s in enumerate(s_grid):
            y = exp_map(x, TangentVector(x, d * (s * frac) * conf))
            sups[i] = max(sups[i], angle(z, x, y))
        made += 1
    mono_violation = float(np.max(np.maximum(sups[:-1] - sups[1:], 0.0)))
    ok = mono_violation <= 1e-12 and sups[0] < 0.01
    return CheckResult("lemma_2_3_small_angle", "lemma_2_3", pool, float(sups[0]),
                       0.01, ok, el(),
                       detail={"sup_by_scale": dict(zip(map(float, s_grid), map(float, sups))),
                               "monotonicity_violation": mono_violation})


def check_quasicenter_uniqueness(cfg: VerifyConfig) -> CheckResult:
    el = _timer()
    rng = rng_from(cfg.seed + 15)
    trials = cfg.count(50, 5)
    worst = 0.0
    made = 0
    while made < trials:
        n = int(rng.integers(2, 4))
        coords, flags = _random_triangles(rng, 1, n, 1.0, ideal_prob=0.3, radius=3.0)
        verts = [IdealPoint(coords[0, j]) if flags[0, j] else BallPoint(coords[0, j])
                 for j in range(3)]
        try:
            tri = Triangle(*verts)
            w1, _ = quasicenter(tri, K1, seed=1)
            w2, _ = quasicenter(tri, K1, seed=2)
        except Exception:
            continue
        worst = max(worst, hyp_dist(K1, w1, w2))
        made += 1
    return CheckResult("quasicenter_uniqueness", "quasicenter", trials, worst,
                       1e-4, worst < 1e-4, el())


def check_comparison_angles(cfg: VerifyConfig) -> CheckResult:
    """Measured angles match the same-curvature comparison and are bracketed
    by the reference-curvature comparison; corresponding midpoint distances
    are ordered the same way."""
    el = _timer()
    rng = rng_from(cfg.seed + 16)
    trials = cfg.count(200, 6)
    worst = 0.0
    made = 0
    while made < trials:
        n = int(rng.integers(2, 4))
        lam = float(rng.choice([1.5, 2.0]))
        k = CurvatureScale(lam)
        pts = sample_ball_hyperbolic(rng, 3, n, lam, 3.0)
        try:
            tri = Triangle(*(BallPoint(p) for p in pts))
            rep = comparison_report(tri, k)
        except Exception:
            continue
        for meas, clam, cone in zip(rep.angles, rep.comparison_angles_lambda,
                                    rep.comparison_angles_one):
            worst = max(worst, abs(meas - clam))
            worst = max(worst, clam - meas)       # inequality (1) lower side
            worst = max(worst, meas - cone)       # inequality (1) upper side
        worst = max(worst, rep.corresponding_dist_lambda - rep.corresponding_dist_actual)
        worst = max(worst, rep.corresponding_dist_actual - rep.corresponding_dist_one)
        made += 1
    return CheckResult("comparison_angles", "comparison_triangles", trials, worst,
                       1e-8, worst < 1e-8, el())


# ---------------------------------------------------------------------------
# visual checks
# ---------------------------------------------------------------------------

def check_lemma_2_5_bridge(cfg: VerifyConfig) -> CheckResult:
    """Visual distance and visual angle are small together (both directions,
    as positive monotone envelopes)."""
    el = _timer()
    rng = rng_from(cfg.seed + 20)
    per = cfg.count(10_000, 100)
    eps_grid = (0.05, 0.15, 0.5, 1.0)
    min_env = np.inf
    for lam in (1.0, 2.0):
        k = CurvatureScale(lam)
        cfgv = visual.VisualConfig(BallPoint(np.zeros(2)), k)
        table = visual.angle_visual_probe(cfgv, per, seed=int(rng.integers(0, 2**31)))
        d, a = table[:, 0], table[:, 1]
        for eps in eps_grid:
            big_angle = a >= eps
            delta1 = float(d[big_angle].min()) if np.any(big_angle) else np.inf
            big_d = d >= eps if np.any(d >= eps) else None
            delta2 = float(a[d >= eps].min()) if np.any(d >= eps) else np.inf
            min_env = min(min_env, delta1, delta2)
    return CheckResult("lemma_2_5_bridge", "lemma_2_5", per * 2, float(min_env),
                       0.0, min_env > 0.0, el(), direction="measured>thr")


def check_lemma_2_6_proximity(cfg: VerifyConfig) -> CheckResult:
    """Along a ray toward xi, visual separation of (xi, eta) and distance to
    the geodesic p-eta are small together."""
    el = _timer()
    rng = rng_from(cfg.seed + 21)
    total = cfg.count(4_000, 50)
    eps_grid = (0.05, 0.15, 0.5)
    rows = []
    made = 0
    while made < total:
        n = int(rng.integers(2, 4))
        us = sample_boundary(rng, 3, n)
        if (np.linalg.norm(us[0] - us[1]) < 1e-3 or np.linalg.norm(us[0] - us[2]) < 1e-3
                or np.linalg.norm(us[1] - us[2]) < 1e-3):
            continue
        p, xi, eta = (IdealPoint(u) for u in us)
        ray = geodesic_between(p, xi, K1)
        x = ray.point_at(float(rng.uniform(-4.0, 4.0)))
        try:
            rows.append(visual.geodesic_proximity_probe(p, xi, eta, x, K1))
        except Exception:
            continue
        made += 1
    arr = np.asarray(rows)
    min_env = np.inf
    for eps in eps_grid:
        sel = arr[:, 1] >= eps
        if np.any(sel):
            min_env = min(min_env, float(arr[sel, 0].min()))
        sel = arr[:, 0] >= eps
        if np.any(sel):
            min_env = min(min_env, float(arr[sel, 1].min()))
    return CheckResult("lemma_2_6_proximity", "lemma_2_6", total, float(min_env),
                       0.0, min_env > 0.0, el(), direction="measured>thr")


def check_lemma_2_7_perpendicular(cfg: VerifyConfig) -> CheckResult:
    """Admissible near pairs see the ideal point nearly perpendicularly:
    sin(angle) >= 1 / cosh(lam d(x, y))."""
    el = _timer()
    rng = rng_from(cfg.seed + 22)
    total = cfg.count(4_000, 50)
    worst = np.inf
    made = 0
    while made < total:
        n = int(rng.integers(2, 4))
        lam = float(rng.choice([1.0, 2.0]))
        k = CurvatureScale(lam)
        x = BallPoint(sample_ball_hyperbolic(rng, 1, n, lam, 3.0)[0])
        d = sample_boundary(rng, 1, n)[0]
        reach = float(rng.uniform(1e-3, 1.5))
        conf = lam * (1.0 - x.coords @ x.coords) / 2.0
        y = exp_map(x, TangentVector(x, d * reach * conf), k)
        xi = IdealPoint(sample_boundary(rng, 1, n)[0])
        try:
            ang = visual.near_perpendicular_probe(x, y, xi, k)
        except Exception:
            continue
        margin = np.sin(ang) - 1.0 / np.cosh(lam * hyp_dist(k, x, y))
        worst = min(worst, float(margin))
        made += 1
    return CheckResult("lemma_2_7_perpendicular", "lemma_2_7", total, float(worst),
                       -1e-9, worst >= -1e-9, el(), direction="measured>=thr")


def check_qs_envelope(cfg: VerifyConfig) -> CheckResult:
    """Fitted distortion-envelope exponent respects the declared constants."""
    el = _timer()
    rng = rng_from(cfg.seed + 23)
    triples = cfg.count(20_000, 500)
    margin = np.inf
    detail = {}
    for n in (2, 3):
        def ideal(vec):
            return IdealPoint(np.asarray(vec) / np.linalg.norm(vec))

        if n == 2:
            p, q, r = ideal([1, 0.2]), ideal([-1, 0.3]), ideal([0.1, -1])
        else:
            p, q, r = ideal([1, 0.2, 0.1]), ideal([-1, 0.3, -0.2]), ideal([0.1, -1, 0.2])
        for h in _builtin_boundary_maps(n):
            x, x_img = qs_basepoints(h, p, q, r, K1)
            cloud = qs_cloud(h, VisualConfig(x, K1), VisualConfig(x_img, K1),
                             triples, seed=int(rng.integers(0, 2**31)))
            floor = 1.0 / h.declared_L - 0.1
            margin = min(margin, cloud.alpha - floor)
            detail[f"n{n}:{h.label()}"] = {"alpha": round(cloud.alpha, 4),
                                           "coeff": round(cloud.coeff, 4)}
    return CheckResult("lemma_3_1_qs_envelope", "lemma_3_1", triples, float(margin),
                       0.0, margin >= 0.0, el(), direction="measured>=thr",
                       detail=detail)


# ---------------------------------------------------------------------------
# extension checks
# ---------------------------------------------------------------------------

def _grid_points(rng, count, n, radius_h, lam):
    return sample_ball_hyperbolic(rng, count, n, lam, radius_h)


def check_extension_identity(cfg: VerifyConfig) -> CheckResult:
    el = _timer()
    rng = rng_from(cfg.seed + 30)
    per_dim = cfg.count(1_000, 12)
    worst = 0.0
    for n in (2, 3):
        h = identity_map(n)
        ext = ExtensionConfig(p=_ref_ideal(n), m=256, refine_iters=32)
        for coords in _grid_points(rng, per_dim, n, 5.0, 1.0):
            x = BallPoint(coords)
            worst = max(worst, hyp_dist(K1, extend(h, ext, x), x))
    return CheckResult("extension_identity_law", "extension_construction",
                       2 * per_dim, worst, 1e-9, worst < 1e-9, el())


def check_extension_isometry(cfg: VerifyConfig) -> CheckResult:
    el = _timer()
    rng = rng_from(cfg.seed + 31)
    per_dim = cfg.count(1_000, 12)
    worst = 0.0
    for n in (2, 3):
        iso = translation_along_first_axis(1.0, n).then(
            MobiusIsometry.rotation(_random_rotation(rng, n)))
        h = mobius_boundary(iso)
        ext = ExtensionConfig(p=_ref_ideal(n), m=256, refine_iters=32)
        for coords in _grid_points(rng, per_dim, n, 5.0, 1.0):
            x = BallPoint(coords)
            worst = max(worst, hyp_dist(K1, extend(h, ext, x),
                                        BallPoint(iso.apply_interior_raw(coords))))
    return CheckResult("extension_isometry_law", "extension_construction",
                       2 * per_dim, worst, 1e-5, worst < 1e-5, el())


def check_visual_band_source(cfg: VerifyConfig) -> CheckResult:
    """d_x(beta, q_x) is exactly sqrt(2)-1 at the reference curvature."""
    el = _timer()
    rng = rng_from(cfg.seed + 32)
    per_dim = cfg.count(300, 6)
    worst = 0.0
    for n in (2, 3):
        p = _ref_ideal(n)
        for coords in _grid_points(rng, per_dim, n, 5.0, 1.0):
            x = BallPoint(coords)
            qx = q_of(x, p).direction
            betas = extension._equator_raw(x, p, 64)
            vals = visual_dist_many(coords, 1.0, betas,
                                    np.broadcast_to(qx, betas.shape))
            worst = max(worst, float(np.max(np.abs(vals - SQRT2_M1))))
    return CheckResult("lemma_3_2_visual_band", "lemma_3_2", 2 * per_dim, worst,
                       1e-9, worst < 1e-9, el())


def check_image_band(cfg: VerifyConfig) -> CheckResult:
    """Image-side visual separations d_x'(h q_x, h beta) stay in (0, 1)."""
    el = _timer()
    rng = rng_from(cfg.seed + 33)
    per_map = cfg.count(100, 4)
    lo, hi = np.inf, -np.inf
    detail = {}
    for n in (2, 3):
        ext = ExtensionConfig(p=_ref_ideal(n), m=32, refine_iters=16)
        for h in _builtin_boundary_maps(n):
            pts = _grid_points(rng, per_map, n, 4.0, 1.0)
            rep = boundary_bounds_check(h, ext, pts)
            lo = min(lo, rep.image_min)
            hi = max(hi, rep.image_max)
            detail[f"n{n}:{h.label()}"] = {"min": round(rep.image_min, 6),
                                           "max": round(rep.image_max, 6)}
    ok = lo > 0.0 and hi < 1.0
    return CheckResult("lemma_3_3_image_band", "lemma_3_3", per_map * 10, float(lo),
                       0.0, ok, el(), direction="measured>thr",
                       detail={"image_max": float(hi), **detail})


def check_span_bound(cfg: VerifyConfig) -> CheckResult:
    """Projected equator span has a finite sup that saturates as the sampled
    ball grows from radius 4 to 6 (nested samples)."""
    el = _timer()
    rng = rng_from(cfg.seed + 34)
    per_ball = cfg.count(1_000, 12)
    worst_rel = 0.0
    detail = {}
    ext = ExtensionConfig(p=_ref_ideal(2))
    inner = _grid_points(rng, per_ball, 2, 4.0, 1.0)
    shell = _grid_points(rng, per_ball, 2, 6.0, 1.0)
    for h in _builtin_boundary_maps(2):
        sup4 = 0.0
        for coords in inner:
            sup4 = max(sup4, projection_span(h, ext, BallPoint(coords)).length)
        sup6 = sup4
        for coords in shell:
            sup6 = max(sup6, projection_span(h, ext, BallPoint(coords)).length)
        rel = 0.0 if sup6 < 1e-6 else (sup6 - sup4) / sup6
        worst_rel = max(worst_rel, rel)
        detail[h.label()] = {"sup_r4": float(sup4), "sup_r6": float(sup6)}
    return CheckResult("lemma_3_4_span", "lemma_3_4", per_ball * 2, worst_rel,
                       0.2, worst_rel <= 0.2, el(), detail=detail)


def check_uniform_continuity(cfg: VerifyConfig) -> CheckResult:
    """Forward modulus of the warp extension decays below 1e-2 at eps 1e-3."""
    el = _timer()
    h = angle_warp(0.2, 1, 2)
    ext = ExtensionConfig(p=_ref_ideal(2))
    grid = [1e-3, 3e-3, 1e-2, 3e-2, 1e-1, 3e-1]
    rows = continuity_modulus(h, ext, 5.0, grid,
                              n_base=cfg.count(24, 4), n_dirs=cfg.count(8, 3),
                              seed=cfg.seed + 35)
    omega_small = rows[0][1]
    mono = all(rows[i][1] <= rows[i + 1][1] + 1e-15 for i in range(len(rows) - 1))
    ok = omega_small < 1e-2 and mono
    return CheckResult("uniform_continuity", "forward_modulus",
                       cfg.count(24, 4) * cfg.count(8, 3) * len(grid),
                       float(omega_small), 1e-2, ok, el(),
                       detail={"rows": [[round(v, 6) for v in r] for r in rows]})


def check_inverse_gap(cfg: VerifyConfig) -> CheckResult:
    """Sphere images keep a positive gap; points far apart on a common ray
    have far images."""
    el = _timer()
    h = angle_warp(0.2, 1, 2)
    ext = ExtensionConfig(p=_ref_ideal(2))
    grid = [1e-3, 1e-2, 1e-1, 3e-1]
    rows = continuity_modulus(h, ext, 5.0, grid,
                              n_base=cfg.count(16, 4), n_dirs=cfg.count(8, 3),
                              seed=cfg.seed + 36)
    min_delta = min(r[2] for r in rows)
    rng = rng_from(cfg.seed + 37)
    trials = cfg.count(1_000, 12)
    ray_gap = np.inf
    made = 0
    while made < trials:
        q = sample_boundary(rng, 1, 2)[0]
        if np.linalg.norm(q - ext.p.direction) < 1e-3:
            continue
        g = geodesic_between(ext.p, IdealPoint(q), K1)
        t0 = float(rng.uniform(-3.0, 3.0))
        gap = float(rng.uniform(0.5, 2.0))
        f1 = extend(h, ext, g.point_at(t0))
        f2 = extend(h, ext, g.point_at(t0 + gap))
        ray_gap = min(ray_gap, hyp_dist(K1, f1, f2))
        made += 1
    measured = float(min(min_delta, ray_gap))
    return CheckResult("prop_5_1_gap", "prop_5_1", trials, measured, 0.0,
                       measured > 0.0, el(), direction="measured>thr",
                       detail={"min_sphere_gap": float(min_delta),
                               "min_ray_gap": float(ray_gap)})


def check_extension_injectivity(cfg: VerifyConfig) -> CheckResult:
    """Distinct grid points keep distinct images; image order along every
    reference ray matches the source order."""
    el = _timer()
    rng = rng_from(cfg.seed + 38)
    count = cfg.count(300, 10)
    h = angle_warp(0.2, 1, 2)
    ext = ExtensionConfig(p=_ref_ideal(2))
    pts = _grid_points(rng, count, 2, 4.0, 1.0)
    imgs = np.stack([extend(h, ext, BallPoint(c)).coords for c in pts])
    src = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
    dst = np.linalg.norm(imgs[:, None, :] - imgs[None, :, :], axis=-1)
    ok_pairs = src >= 1e-3
    min_img = float(np.min(np.where(ok_pairs, dst, np.inf)))
    trials = cfg.count(1_000, 12)
    violations = 0
    made = 0
    while made < trials:
        q = sample_boundary(rng, 1, 2)[0]
        if np.linalg.norm(q - ext.p.direction) < 1e-3:
            continue
        g = geodesic_between(ext.p, IdealPoint(q), K1)
        t1, t2 = np.sort(rng.uniform(-4.0, 4.0, 2))
        if t2 - t1 < 1e-3:
            continue
        c1 = extension._extend_core(h, ext, g.point_at(t1))
        c2 = extension._extend_core(h, ext, g.point_at(t2))
        # larger source parameter lies closer to q = far endpoint, so its
        # image parameter (measured toward the image of p) must be smaller
        if not c2.t_max < c1.t_max:
            violations += 1
        made += 1
    ok = min_img >= 1e-8 and violations == 0
    return CheckResult("extension_injectivity", "extension_construction",
                       count + trials, min_img, 1e-8, ok, el(),
                       direction="measured>=thr",
                       detail={"ray_order_violations": violations})


def check_equivariance(cfg: VerifyConfig) -> CheckResult:
    """Post-composing with a target isometry moves the extension by that
    isometry; pre-composing with a source isometry relocates it."""
    el = _timer()
    rng = rng_from(cfg.seed + 39)
    per_map = cfg.count(40, 4)
    worst = 0.0
    for n in (2, 3):
        ext = ExtensionConfig(p=_ref_ideal(n), m=96, refine_iters=24)
        g2 = _random_isometry(rng, n)
        g1 = _random_isometry(rng, n)
        for h in (identity_map(n), angle_warp(0.2, 1, n)):
            post = composite([h, mobius_boundary(g2)])
            pre = composite([mobius_boundary(g1), h])
            pre_cfg = ExtensionConfig(
                p=IdealPoint(g1.inverse().apply_ideal_raw(ext.p.direction)),
                m=96, refine_iters=24)
            for coords in _grid_points(rng, per_map, n, 3.0, 1.0):
                x = BallPoint(coords)
                lhs = extend(post, ext, x)
                rhs = apply_mobius(g2, extend(h, ext, x))
                worst = max(worst, hyp_dist(K1, lhs, rhs))
                lhs = extend(pre, pre_cfg,
                             BallPoint(g1.inverse().apply_interior_raw(coords)))
                rhs = extend(h, ext, x)
                worst = max(worst, hyp_dist(K1, lhs, rhs))
    return CheckResult("equivariance", "extension_construction", per_map * 8,
                       worst, 1e-6, worst < 1e-6, el())


def check_equator_planar_match(cfg: VerifyConfig) -> CheckResult:
    """For plane-preserving maps the sampled 3d extension agrees with the
    exact planar one."""
    el = _timer()
    rng = rng_from(cfg.seed + 40)
    count = cfg.count(60, 6)
    worst = 0.0
    iso2 = translation_along_first_axis(0.8, 2)
    iso3 = translation_along_first_axis(0.8, 3)
    pairs = [
        (identity_map(2), identity_map(3)),
        (mobius_boundary(iso2), mobius_boundary(iso3)),
        (angle_warp(0.2, 1, 2), angle_warp(0.2, 1, 3)),
    ]
    cfg2 = ExtensionConfig(p=_ref_ideal(2))
    cfg3 = ExtensionConfig(p=_ref_ideal(3), m=256, refine_iters=40)
    pts = _grid_points(rng, count, 2, 4.0, 1.0)
    for h2, h3 in pairs:
        for coords in pts:
            f2 = extend(h2, cfg2, BallPoint(coords))
            f3 = extend(h3, cfg3, BallPoint([coords[0], coords[1], 0.0]))
            worst = max(worst, hyp_dist(K1, f3,
                                        BallPoint([f2.coords[0], f2.coords[1], 0.0])))
    return CheckResult("equator_planar_match", "extension_construction",
                       count * 3, worst, 1e-4, worst < 1e-4, el())


def check_bounded_distance(cfg: VerifyConfig) -> CheckResult:
    """The extension stays at bounded distance from a companion interior
    quasiisometry: saturating sup for the warp pair, tight bounds for
    isometries and jittered isometries."""
    el = _timer()
    rng = rng_from(cfg.seed + 41)
    count = cfg.count(400, 8)
    ext = ExtensionConfig(p=_ref_ideal(2))
    f_warp = polar_warp(0.2, 1, 2)
    inner = _grid_points(rng, count, 2, 3.0, 1.0)
    shell = _grid_points(rng, count, 2, 6.0, 1.0)
    sup3 = compare_to_interior(f_warp, ext, inner)
    sup6 = max(sup3, compare_to_interior(f_warp, ext, shell))
    rel = (sup6 - sup3) / sup6 if sup6 > 0 else 0.0

    iso = translation_along_first_axis(1.0, 2)
    pts = _grid_points(rng, cfg.count(200, 8), 2, 4.0, 1.0)
    sup_iso = compare_to_interior(mobius_map(iso), ext, pts)
    f_jit = jittered_isometry(iso, 0.3)
    sup_jit = compare_to_interior(f_jit, ext, pts, h=mobius_boundary(iso))
    ok = rel < 0.10 and sup_iso < 1e-5 and sup_jit <= 0.3 + 1e-5
    return CheckResult("bounded_distance", "bounded_distance", count * 2, rel,
                       0.10, ok, el(),
                       detail={"sup_r3": float(sup3), "sup_r6": float(sup6),
                               "sup_isometry": float(sup_iso),
                               "sup_jitter": float(sup_jit)})


def check_basepoint_sensitivity(cfg: VerifyConfig) -> CheckResult:
    el = _timer()
    rng = rng_from(cfg.seed + 42)
    count = cfg.count(100, 6)
    pts = _grid_points(rng, count, 2, 3.0, 1.0)
    p1 = _ref_ideal(2)
    p2 = IdealPoint([0.0, 1.0])
    s_id = extension.basepoint_sensitivity(identity_map(2), p1, p2, pts)
    iso = translation_along_first_axis(1.0, 2)
    s_mob = extension.basepoint_sensitivity(mobius_boundary(iso), p1, p2, pts)
    s_warp = extension.basepoint_sensitivity(angle_warp(0.2, 1, 2), p1, p2, pts)
    ok = s_id < 1e-9 and s_mob < 1e-5 and np.isfinite(s_warp)
    return CheckResult("basepoint_sensitivity", "extension_construction", count,
                       float(s_warp), float("inf"), ok, el(),
                       direction="finite",
                       detail={"identity": float(s_id), "mobius": float(s_mob),
                               "warp": float(s_warp)})


# ---------------------------------------------------------------------------
# decomposition checks
# ---------------------------------------------------------------------------

def _all_graphs_up_to(nmax):
    for verts in range(nmax + 1):
        pairs = [(i, j) for i in range(verts) for j in range(i + 1, verts)]
        for mask in range(1 << len(pairs)):
            edges = [pairs[b] for b in range(len(pairs)) if mask >> b & 1]
            yield nets.Graph.from_edges(verts, edges)


def check_coloring(cfg: VerifyConfig) -> CheckResult:
    """First-fit colorings are proper with at most max-degree + 1 colors:
    exhaustively on tiny graphs, then on random bounded-degree graphs."""
    el = _timer()
    rng = rng_from(cfg.seed + 50)
    worst_excess = -np.inf
    exhaustive_n = 6 if cfg.scale >= 1.0 else 5
    checked = 0
    for g in _all_graphs_up_to(exhaustive_n):
        c = nets.greedy_color(g)
        if not c.is_proper_for(g):
            worst_excess = np.inf
        worst_excess = max(worst_excess, c.n_colors - (g.max_degree + 1))
        checked += 1
    randoms = cfg.count(1_000, 20)
    for _ in range(randoms):
        verts = int(rng.integers(2, 60))
        target_deg = int(rng.integers(1, 17))
        edges = set()
        deg = [0] * verts
        for _ in range(verts * target_deg):
            u, v = rng.integers(0, verts, 2)
            if u == v or deg[u] >= target_deg or deg[v] >= target_deg:
                continue
            if (min(u, v), max(u, v)) in edges:
                continue
            edges.add((min(int(u), int(v)), max(int(u), int(v))))
            deg[u] += 1
            deg[v] += 1
        g = nets.Graph.from_edges(verts, edges)
        c = nets.greedy_color(g)
        if not c.is_proper_for(g):
            worst_excess = np.inf
        worst_excess = max(worst_excess, c.n_colors - (g.max_degree + 1))
        checked += 1
    return CheckResult("lemma_6_1_coloring", "lemma_6_1", checked,
                       float(worst_excess), 0.0, worst_excess <= 0.0, el(),
                       detail={"exhaustive_up_to": exhaustive_n})


def check_incidence(cfg: VerifyConfig) -> CheckResult:
    """Tangent hyperbolic disks: the hexagonal flower has center degree 6."""
    el = _timer()
    r = 0.4
    theta = np.linspace(0.0, 2.0 * np.pi, 128, endpoint=False)
    ring = np.tanh(r / 2.0) * np.stack([np.cos(theta), np.sin(theta)], axis=1)
    petals = []
    contact = []
    for j in range(6):
        ang = np.pi * j / 3.0
        d = np.array([np.cos(ang), np.sin(ang)])
        center = np.tanh(r) * d
        tangency = np.tanh(r / 2.0) * d
        petals.append(np.vstack([_mobius_add(center, ring), tangency]))
        contact.append(tangency)
    center_set = np.vstack([ring] + contact)
    g = nets.incidence_graph([center_set] + petals, 1e-6, K1)
    degs = [len(a) for a in g.adjacency]
    ok = degs[0] == 6 and all(d == 1 for d in degs[1:])
    return CheckResult("incidence_graph", "incidence_graph", 7, float(degs[0]),
                       6.0, ok, el(), direction="measured==thr",
                       detail={"degrees": degs})


def check_net(cfg: VerifyConfig) -> CheckResult:
    """Greedy nets satisfy both net inequalities against their sample and
    are deterministic under the seed."""
    el = _timer()
    sample_count = cfg.count(4_096, 128)
    net = nets.greedy_net(3.0, 0.5, n=2, seed=cfg.seed, sample_count=sample_count)
    d = _dist_raw(1.0, net.points[:, None, :], net.points[None, :, :])
    iu = np.triu_indices(net.points.shape[0], 1)
    min_sep = float(d[iu].min()) if iu[0].size else np.inf
    again = nets.greedy_net(3.0, 0.5, n=2, seed=cfg.seed, sample_count=sample_count)
    deterministic = np.array_equal(net.points, again.points)
    singleton = nets.greedy_net(2.0, 50.0, n=2, seed=cfg.seed,
                                sample_count=max(sample_count // 4, 64))
    ok = (min_sep >= 0.5 and net.covering_radius <= 0.5 + 0.2
          and deterministic and singleton.points.shape[0] == 1)
    return CheckResult("separated_net", "separated_net", sample_count, min_sep,
                       0.5, ok, el(), direction="measured>=thr",
                       detail={"covering_radius": net.covering_radius,
                               "net_size": int(net.points.shape[0])})


def check_net_bilipschitz(cfg: VerifyConfig) -> CheckResult:
    """Quasiisometries restrict to bilipschitz maps on coarse nets."""
    el = _timer()
    sample_count = cfg.count(4_096, 128)
    iso = translation_along_first_axis(0.7, 2)
    net = nets.greedy_net(4.0, 2.0, n=2, seed=cfg.seed + 1, sample_count=sample_count)
    lo_i, hi_i = nets.net_bilipschitz_estimate(mobius_map(iso), net)
    f_jit = jittered_isometry(iso, 0.3)
    lo_j, hi_j = nets.net_bilipschitz_estimate(f_jit, net)
    f_warp = polar_warp(0.2, 1, 2)
    lo_w, hi_w = nets.net_bilipschitz_estimate(f_warp, net)
    # net separation 2 with displacement <= 0.3 forces ratios into [0.7, 1.3]
    ok = (abs(lo_i - 1.0) < 1e-9 and abs(hi_i - 1.0) < 1e-9
          and lo_j >= 0.7 - 1e-9 and hi_j <= 1.3 + 1e-9
          and lo_w > 0.0 and np.isfinite(hi_w))
    return CheckResult("net_bilipschitz", "net_restriction", int(net.points.shape[0]),
                       float(lo_j), 0.7, ok, el(), direction="measured>=thr",
                       detail={"isometry": [lo_i, hi_i], "jitter": [lo_j, hi_j],
                               "warp": [lo_w, hi_w]})


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

ALL_CHECKS = [
    ("trig_identity", check_trig_identity),
    ("metric_axioms", check_metric_axioms),
    ("lambda_scaling", check_lambda_scaling),
    ("convexity", check_convexity),
    ("exp_log_roundtrip", check_exp_log_roundtrip),
    ("ray_limit_homeo", check_ray_limit_homeo),
    ("mobius_isometry", check_mobius_isometry),
    ("delta_log3", check_delta_log3),
    ("lemma_2_1_gap", check_lemma_2_1_gap),
    ("lemma_2_2_gap", check_lemma_2_2_gap),
    ("lemma_2_3_small_angle", check_lemma_2_3_small_angle),
    ("lemma_2_4_bound", check_lemma_2_4_bound),
    ("quasicenter_uniqueness", check_quasicenter_uniqueness),
    ("comparison_angles", check_comparison_angles),
    ("lemma_2_5_bridge", check_lemma_2_5_bridge),
    ("lemma_2_6_proximity", check_lemma_2_6_proximity),
    ("lemma_2_7_perpendicular", check_lemma_2_7_perpendicular),
    ("lemma_3_1_qs_envelope", check_qs_envelope),
    ("extension_identity_law", check_extension_identity),
    ("extension_isometry_law", check_extension_isometry),
    ("lemma_3_2_visual_band", check_visual_band_source),
    ("lemma_3_3_image_band", check_image_band),
    ("lemma_3_4_span", check_span_bound),
    ("uniform_continuity", check_uniform_continuity),
    ("prop_5_1_gap", check_inverse_gap),
    ("extension_injectivity", check_extension_injectivity),
    ("equivariance", check_equivariance),
    ("equator_planar_match", check_equator_planar_match),
    ("bounded_distance", check_bounded_distance),
    ("basepoint_sensitivity", check_basepoint_sensitivity),
    ("lemma_6_1_coloring", check_coloring),
    ("incidence_graph", check_incidence),
    ("separated_net", check_net),
    ("net_bilipschitz", check_net_bilipschitz),
]

CHECK_IDS = [name for name, _ in ALL_CHECKS]


def run_checks(cfg: VerifyConfig, only=None) -> list:
    if only is not None:
        unknown = set(only) - set(CHECK_IDS)
        if unknown:
            raise KeyError(f"unknown check ids: {sorted(unknown)}")
    results = []
    for name, fn in ALL_CHECKS:
        if only is not None and name not in only:
            continue
        results.append(fn(cfg))
    return results


def report_dict(results, cfg: VerifyConfig) -> dict:
    return {
        "seed": cfg.seed,
        "scale": cfg.scale,
        "low_power": cfg.low_power,
        "passed": all(r.passed for r in results),
        "failed_ids": [r.check_id for r in results if not r.passed],
        "checks": [r.row() for r in results],
    }
