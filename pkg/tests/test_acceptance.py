"""Acceptance suite: the flagship checks at their full sample counts.

Each criterion runs through the shared check registry (hypext.verify) at the
default, unscaled counts, prints one pass/fail line, and asserts both the
verdict and the stated runtime budget.
"""

import numpy as np
import pytest

import hypext.verify as V
from hypext.verify import VerifyConfig

CFG = VerifyConfig(seed=7, scale=1.0)
CHECKS = dict(V.ALL_CHECKS)


def run(check_id):
    return CHECKS[check_id](CFG)


def report(tag, result, budget=None):
    flag = "PASS" if result.passed else "FAIL"
    line = (f"[{flag}] {tag}: {result.check_id} measured={result.measured:.6g} "
            f"threshold={result.threshold:.6g} samples={result.samples} "
            f"time={result.seconds:.1f}s")
    print(line)
    assert result.passed, line
    if budget is not None:
        assert result.seconds < budget, f"{result.check_id} exceeded {budget}s budget"


def test_c01_right_triangle_identity():
    report("criterion 1", run("trig_identity"), budget=5.0)


def test_c02_delta_hyperbolicity():
    result = run("delta_log3")
    assert result.threshold == pytest.approx(np.log(3.0) + 1e-3)
    report("criterion 2", result, budget=120.0)


def test_c03_obtuse_vertex_distance_bound():
    result = run("lemma_2_4_bound")
    assert result.threshold == pytest.approx(np.log(1.0 + np.sqrt(2.0)) + 1e-3)
    assert result.detail["attainment_error"] <= 1e-6
    report("criterion 3", result)


def test_c04_identity_and_isometry_laws():
    ident = run("extension_identity_law")
    report("criterion 4 (identity)", ident)
    isom = run("extension_isometry_law")
    report("criterion 4 (isometry)", isom)
    assert ident.seconds + isom.seconds < 60.0


def test_c05_source_band_exactness():
    result = run("lemma_3_2_visual_band")
    assert result.threshold == 1e-9
    report("criterion 5", result)


def test_c06_span_bound_and_stability():
    result = run("lemma_3_4_span")
    for label, sups in result.detail.items():
        assert np.isfinite(sups["sup_r6"]), f"span sup for {label} is not finite"
    report("criterion 6", result)


def test_c07_continuity_moduli():
    forward = run("uniform_continuity")
    report("criterion 7 (forward modulus)", forward)
    rows = forward.detail["rows"]
    assert rows[0][0] == pytest.approx(1e-3)
    assert rows[0][1] < 1e-2
    inverse = run("prop_5_1_gap")
    report("criterion 7 (inverse gap)", inverse)
    assert forward.seconds + inverse.seconds < 120.0


def test_c08_bounded_distance_from_interior_map():
    result = run("bounded_distance")
    assert result.detail["sup_jitter"] <= 0.3 + 1e-5
    assert result.detail["sup_isometry"] < 1e-5
    report("criterion 8", result)


def test_c09_quasisymmetry_envelope():
    result = run("lemma_3_1_qs_envelope")
    report("criterion 9", result)


def test_c10_bounded_valence_coloring():
    result = run("lemma_6_1_coloring")
    assert result.detail["exhaustive_up_to"] == 6
    report("criterion 10", result, budget=10.0)
