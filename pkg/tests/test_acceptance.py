"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion
lines.
"""

import json
import math
import os
import time

import numpy as np
import pytest
from scipy.special import ndtr
from scipy.stats import rankdata

from conftest import random_cohort
from rocaudit import (
    Cohort,
    PerturbationSpec,
    ThresholdDomain,
    auroc,
    auroc_pairwise_oracle,
    bias_robustness,
    distance_matrix,
    drift_score,
    monte_carlo_noise_auroc,
    noise_expected_auroc,
    roc_curve,
    wasserstein2,
)
from rocaudit.cli import run

HERE = os.path.dirname(__file__)
DATA = os.path.join(HERE, "..", "demos", "data")
VALIDATION = os.path.join(DATA, "validation.csv")
TEST = os.path.join(DATA, "test.csv")


def pair_cohort(neg, pos, name="c"):
    scores = np.array(list(neg) + list(pos), dtype=float)
    labels = np.array([0] * len(neg) + [1] * len(pos))
    return Cohort(scores, labels, name=name)


def test_criterion_1_auroc_oracle_equivalence():
    rng = np.random.default_rng(101)
    start = time.monotonic()
    worst = 0.0
    for _ in range(1000):
        c = random_cohort(rng, max_size=50, ties=True)
        worst = max(worst, abs(auroc(c) - auroc_pairwise_oracle(c)))
    elapsed = time.monotonic() - start
    assert worst < 1e-12
    assert elapsed < 5.0
    print(f"\nPASS criterion 1: auroc == pairwise oracle on 1000 cohorts "
          f"(max dev {worst:.2e}, {elapsed:.2f}s)")


def test_criterion_2_monotone_invariance_and_hidden_shift():
    rng = np.random.default_rng(102)
    maps = [
        lambda x: 2.5 * x + 0.3,          # affine
        lambda x: x + x ** 3,             # cubic plus identity
        np.exp,                           # exponential
    ]
    start = time.monotonic()
    for _ in range(100):
        c = random_cohort(rng, max_size=40, ties=True, score_range=(-1.0, 1.0))
        base_curve, base_auroc = roc_curve(c), auroc(c)
        for f in maps:
            mapped = Cohort(f(c.scores), c.labels)
            mc = roc_curve(mapped)
            assert np.max(np.abs(mc.fpr - base_curve.fpr)) < 1e-12
            assert np.max(np.abs(mc.tpr - base_curve.tpr)) < 1e-12
            assert abs(auroc(mapped) - base_auroc) < 1e-12

    # hidden-shift phenomenon: identical ROC geometry, visible drift
    n = 300
    v_neg = rng.normal(0.3, 0.05, n)
    v_pos = rng.normal(0.7, 0.05, n)
    v = pair_cohort(v_neg, v_pos, "validation")
    t = pair_cohort(v_neg + 0.25, v_pos + 0.25, "test")
    assert abs(auroc(v) - auroc(t)) < 1e-3
    d = drift_score(v, t, ThresholdDomain(0.0, 1.0), allow_out_of_domain=True)
    assert d.score > 0.05
    m = distance_matrix(v, t)
    assert m.entries[0, 1] > 0.2 and m.entries[1, 0] > 0.2
    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    print(f"PASS criterion 2: monotone invariance + hidden-shift phenomenon "
          f"(drift {d.score:.3f}, off-diag W2 {m.entries[0, 1]:.3f}/"
          f"{m.entries[1, 0]:.3f}, {elapsed:.2f}s)")


def _sampled_bias_curve(c: Cohort, sigmas: np.ndarray) -> np.ndarray:
    """AUROC of the shifted cohort at each sigma, via tie-corrected rank
    sums on the perturbed score matrix (independent of the clamp identity)."""
    shifted = c.scores[None, :] - sigmas[:, None] * (c.labels == 1)[None, :]
    ranks = rankdata(shifted, axis=1)
    pos = c.labels == 1
    n_pos, n_neg = int(pos.sum()), int((~pos).sum())
    return (ranks[:, pos].sum(axis=1) - n_pos * (n_pos + 1) / 2) / (n_pos * n_neg)


def test_criterion_3_bias_closed_form():
    rng = np.random.default_rng(103)
    sigma_max = 1.0
    sigmas = np.linspace(0.0, sigma_max, 10001)
    bound = 2.0 * sigma_max / 10_000
    checked = 0
    while checked < 100:
        c = random_cohort(rng, max_size=30, ties=True)
        if auroc(c) == 0.0:
            continue
        checked += 1
        res = bias_robustness(c, PerturbationSpec("bias", 0.0, sigma_max))
        trap = np.trapezoid(_sampled_bias_curve(c, sigmas), sigmas)
        assert abs(res.raw_integral - trap) <= bound

    point = bias_robustness(pair_cohort([0.0], [1.0]), PerturbationSpec("bias", 0.0, 2.0))
    assert point.score == 1.0
    print("PASS criterion 3: exact bias integral vs 10001-point trapezoid on "
          "100 cohorts; point-mass score exactly 1.0")


def test_criterion_4_noise_analytic_vs_monte_carlo():
    rng = np.random.default_rng(104)
    start = time.monotonic()
    for i in range(20):
        c = random_cohort(rng, max_size=100, ties=True)
        sigma = float(rng.uniform(0.1, 1.0))
        analytic = noise_expected_auroc(c, sigma)
        mc = monte_carlo_noise_auroc(c, sigma, draws=100_000, seed=1000 + i)
        assert abs(analytic - mc) < 0.01

    single = noise_expected_auroc(pair_cohort([0.0], [1.0]), 1.0 / math.sqrt(2.0))
    assert abs(single - ndtr(1.0)) < 1e-12
    assert abs(single - 0.841345) < 1e-6
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"PASS criterion 4: analytic vs Monte Carlo noise AUROC on 20 cohorts "
          f"(sigma=1/sqrt(2) pair = {single:.6f}, {elapsed:.1f}s)")


def _midpoint_drift(a: Cohort, b: Cohort, points: int) -> float:
    """Brute-force midpoint Riemann sum of the squared (sens, spec) gap."""
    taus = (np.arange(points) + 0.5) / points
    gap2 = np.zeros(points)
    curves = []
    for c in (a, b):
        sens = (c.positive_scores[None, :] >= taus[:, None]).mean(axis=1)
        spec = (c.negative_scores[None, :] < taus[:, None]).mean(axis=1)
        curves.append((sens, spec))
    gap2 = (curves[0][0] - curves[1][0]) ** 2 + (curves[0][1] - curves[1][1]) ** 2
    return float(gap2.mean())


def test_criterion_5_drift_exactness():
    rng = np.random.default_rng(105)
    points = 100_001
    bound = 4.0 / 100_000
    for _ in range(100):
        a = random_cohort(rng, max_size=25, ties=True)
        b = random_cohort(rng, max_size=25, ties=True)
        exact = drift_score(a, b).score
        assert abs(exact - _midpoint_drift(a, b, points)) <= bound

    v = pair_cohort([0.2], [0.8])
    t = pair_cohort([0.2], [0.6])
    worked = drift_score(v, t).score
    assert worked == pytest.approx(0.2, abs=1e-15)
    assert drift_score(v, v).score == 0.0
    print(f"PASS criterion 5: exact drift vs 100001-point midpoint sum on 100 "
          f"pairs; worked example {worked!r}, identical cohorts 0.0")


def _w2_quantile_grid_oracle(a, b, subdivisions=1_000_000) -> float:
    a, b = np.sort(np.asarray(a, float)), np.sort(np.asarray(b, float))
    qs = (np.arange(subdivisions) + 0.5) / subdivisions
    fa = a[np.minimum((qs * len(a)).astype(int), len(a) - 1)]
    fb = b[np.minimum((qs * len(b)).astype(int), len(b) - 1)]
    return float(np.sqrt(np.mean((fa - fb) ** 2)))


def test_criterion_6_wasserstein_properties():
    rng = np.random.default_rng(106)
    for _ in range(1000):
        a = rng.normal(size=int(rng.integers(1, 12)))
        b = rng.normal(size=int(rng.integers(1, 12)))
        c = rng.normal(size=int(rng.integers(1, 12)))
        assert wasserstein2(a, b) == wasserstein2(b, a)
        assert wasserstein2(a, a) == 0.0
        assert wasserstein2(a, c) <= wasserstein2(a, b) + wasserstein2(b, c) + 1e-9

    a = rng.normal(size=23)
    for shift in (-4.2, 0.5, 13.0):
        assert abs(wasserstein2(a, a + shift) - abs(shift)) < 1e-12

    for _ in range(50):
        n = int(rng.integers(1, 30))
        x, y = rng.normal(size=n), rng.normal(size=n)
        rms = float(np.sqrt(np.mean((np.sort(x) - np.sort(y)) ** 2)))
        assert abs(wasserstein2(x, y) - rms) < 1e-12

    for _ in range(10):
        x = rng.normal(size=int(rng.integers(2, 40)))
        y = rng.normal(size=int(rng.integers(2, 40)))
        assert abs(wasserstein2(x, y) - _w2_quantile_grid_oracle(x, y)) < 1e-5
    print("PASS criterion 6: W2 metric axioms, translation, RMS reduction, "
          "quantile-grid oracle")


def test_criterion_7_cli_determinism(tmp_path):
    snapshots = []
    for tag in ("first", "second"):
        out = tmp_path / f"{tag}.json"
        plots = tmp_path / f"plots_{tag}"
        code = run([
            "compare", "--validation", VALIDATION, "--test", TEST,
            "--mc-draws", "1000", "--seed", "11",
            "--out", str(out), "--plots", str(plots),
        ])
        assert code == 0
        snap = {"report": out.read_bytes()}
        for name in sorted(os.listdir(plots)):
            snap[name] = (plots / name).read_bytes()
        snapshots.append(snap)
    assert snapshots[0] == snapshots[1]
    print(f"PASS criterion 7: repeated CLI runs byte-identical "
          f"({len(snapshots[0])} artifacts)")


def test_criterion_8_end_to_end_golden(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = run(["compare", "--validation", VALIDATION, "--test", TEST, "--out", str(out)])
    assert code == 0
    produced = out.read_bytes()

    golden_path = os.path.join(HERE, "data", "golden_report.json")
    assert produced == open(golden_path, "rb").read()

    doc = json.loads(produced)
    assert doc["schema_version"] == "1.0"
    for key in ("bias_sigma_min", "bias_sigma_max", "noise_sigma_min",
                "noise_sigma_max", "grid_points", "mc_draws", "mc_seed",
                "tau_min", "tau_max"):
        assert key in doc["config"]
    for cohort in doc["cohorts"]:
        assert "auroc" in cohort
        for block in ("bias_robustness", "noise_robustness"):
            for key in ("baseline_auroc", "raw_integral", "score", "normalized_score"):
                assert key in cohort[block]
    assert "drift_score" in doc["comparison"]
    assert np.shape(doc["comparison"]["wasserstein"]["entries"]) == (2, 2)
    capsys.readouterr()
    print("PASS criterion 8: end-to-end compare matches the golden report "
          "and carries every score")
