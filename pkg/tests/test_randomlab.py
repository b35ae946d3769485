import math

import numpy as np
import pytest

from rmck.randomlab import (
    BETA,
    Regime,
    ThresholdCaseError,
    check_stp_formula,
    crossing_point,
    edge_uniforms,
    geometric_grid,
    monotone_within,
    predicted_threshold,
    run_trial,
    sample_gnp,
    sweep,
)


def test_extreme_p():
    assert sample_gnp(10, 0.0, 5).m == 0
    assert sample_gnp(10, 1.0, 5).m == 45
    with pytest.raises(ValueError):
        sample_gnp(10, 1.5, 0)


def test_determinism_and_seed_sensitivity():
    a, b = sample_gnp(30, 0.5, 11), sample_gnp(30, 0.5, 11)
    assert a.edges == b.edges
    assert sample_gnp(30, 0.5, 12).edges != a.edges


def test_uniforms_look_uniform():
    u = edge_uniforms(400, 99)
    assert u.min() >= 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.01
    # coarse histogram check
    hist, _ = np.histogram(u, bins=10, range=(0, 1))
    assert hist.min() > 0.9 * len(u) / 10


def test_samples_nest_in_p():
    # same key, larger p: superset of edges (counter-based coupling)
    lo, hi = set(sample_gnp(40, 0.2, 3).edges), set(sample_gnp(40, 0.4, 3).edges)
    assert lo <= hi


def test_trials():
    r = run_trial(30, 0.9, 2, 1)
    assert r.has_rmc_k and r.baseline_colors == r.m - 2 * 28
    r = run_trial(30, 0.01, 2, 1)
    assert not r.has_rmc_k and r.baseline_colors is None
    r = run_trial(12, 1.0, 6, 0)
    assert r.T == 6 and r.has_rmc_k and r.stp_formula_agrees


def test_stp_formula_on_complete_graph():
    assert check_stp_formula(10, 1.0, 5, 0) == 1.0


def test_predicted_threshold_cases():
    p, deg = predicted_threshold(200, 2, Regime("sublinear-log"))
    assert p == pytest.approx(0.01) and not deg
    p, _ = predicted_threshold(200, 2, Regime("superlinear-log", 200 * math.log(200)))
    assert p == pytest.approx((math.log(200) + 2) / 200)
    assert predicted_threshold(200, 60, Regime("linear-k")) == (1.0, True)
    p, _ = predicted_threshold(200, 2, Regime("sublinear-log"), rule="max")
    assert p == pytest.approx(math.log(200) / 200)
    assert predicted_threshold(200, 1, Regime("sublinear-log"))[0] == pytest.approx(math.log(200) / 200)
    with pytest.raises(ThresholdCaseError):
        predicted_threshold(200, 2, Regime("superlinear-log"))
    with pytest.raises(ThresholdCaseError):
        predicted_threshold(200, 2, Regime("nonsense"))


def test_beta():
    assert BETA == pytest.approx(6.51778, abs=1e-5)


def test_crossing_and_monotone():
    grid = [0.1, 0.2, 0.4]
    c = crossing_point(grid, [0.0, 0.25, 0.75])
    assert 0.2 < c < 0.4
    assert crossing_point(grid, [0.0, 0.1, 0.2]) is None
    assert monotone_within([0.0, 0.5, 0.45, 1.0], 200)
    assert not monotone_within([0.0, 0.9, 0.1], 200)
    assert len(geometric_grid(0.01, 0.16, 5)) == 5


def test_sweep_reproducible_and_full_at_one():
    a = sweep(25, 1, [0.05, 0.2, 1.0], 20, seed=7)
    b = sweep(25, 1, [0.05, 0.2, 1.0], 20, seed=7)
    assert a.to_dict() == b.to_dict()
    assert a.frequencies[-1] == 1.0
    assert all(0 <= f <= 1 for f in a.frequencies)
    with pytest.raises(ValueError):
        sweep(25, 1, [0.2, 0.1], 5, seed=1)


def test_sweep_with_target_and_degenerate_case():
    r = sweep(20, 2, [1.0], 3, seed=1, f_value=20)
    assert r.frequencies == [1.0]
    r = sweep(20, 8, [1.0], 2, seed=1, regime=Regime("linear-k"))
    assert r.p_star == 1.0 and "degenerate" in r.note
