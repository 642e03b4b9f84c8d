"""Cross-cohort discrepancy scores.

Two complementary views of how model outputs move between a validation
and a test cohort:

* drift_score -- integral over thresholds tau of the squared Euclidean
  gap between the two cohorts' (sensitivity, specificity) pairs. Under
  the "positive iff score >= tau" rule both pairs are step functions of
  tau, so the integrand is piecewise constant between the merged distinct
  scores of the two cohorts and the integral is computed exactly.

* distance_matrix -- 2x2 matrix of 2-Wasserstein distances among the four
  class-conditional score samples. A well-generalising model has large
  diagonal entries (classes separated within each cohort) and small
  off-diagonal entries (same class consistent across cohorts).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cohort import Cohort, validate_for_roc
from .errors import EmptySample, ScoreOutsideDomain


@dataclass(frozen=True)
class ThresholdDomain:
    """Integration bounds for the drift integral; default [0, 1]."""

    tau_min: float = 0.0
    tau_max: float = 1.0

    def __post_init__(self):
        if not self.tau_min < self.tau_max:
            raise ValueError("tau_min must be strictly below tau_max")


@dataclass(frozen=True)
class DriftResult:
    score: float
    # contiguous segments covering [tau_min, tau_max]; the squared
    # (sens, spec) gap is constant on each
    tau_lo: np.ndarray
    tau_hi: np.ndarray
    squared_gap: np.ndarray
    # per-component curves sampled at the segment midpoints
    taus: np.ndarray
    sens_v: np.ndarray
    sens_t: np.ndarray
    spec_v: np.ndarray
    spec_t: np.ndarray
    domain: ThresholdDomain


def _sens_spec_curves(cohort: Cohort, taus: np.ndarray):
    """Vectorized sensitivity/specificity at many thresholds."""
    pos = np.sort(cohort.positive_scores)
    neg = np.sort(cohort.negative_scores)
    sens = (len(pos) - np.searchsorted(pos, taus, side="left")) / len(pos)
    spec = np.searchsorted(neg, taus, side="left") / len(neg)
    return sens, spec


def drift_score(
    validation: Cohort,
    test: Cohort,
    domain: ThresholdDomain = ThresholdDomain(),
    allow_out_of_domain: bool = False,
) -> DriftResult:
    """Exact integral of |(sens, spec)_V - (sens, spec)_T|^2 over tau.

    Scores outside [tau_min, tau_max] are rejected unless
    allow_out_of_domain is set: silently integrating over a domain that
    misses operating points would understate the drift.
    """
    validate_for_roc(validation)
    validate_for_roc(test)

    all_scores = np.concatenate([validation.scores, test.scores])
    if not allow_out_of_domain:
        outside = (all_scores < domain.tau_min) | (all_scores > domain.tau_max)
        if np.any(outside):
            bad = float(all_scores[outside][0])
            raise ScoreOutsideDomain(
                f"score {bad} outside threshold domain "
                f"[{domain.tau_min}, {domain.tau_max}]; pass "
                "allow_out_of_domain=True to integrate anyway"
            )

    interior = np.unique(all_scores)
    interior = interior[(interior > domain.tau_min) & (interior < domain.tau_max)]
    edges = np.concatenate([[domain.tau_min], interior, [domain.tau_max]])
    mids = (edges[:-1] + edges[1:]) / 2.0

    sens_v, spec_v = _sens_spec_curves(validation, mids)
    sens_t, spec_t = _sens_spec_curves(test, mids)
    gap2 = (sens_v - sens_t) ** 2 + (spec_v - spec_t) ** 2
    widths = np.diff(edges)
    score = float(np.sum(widths * gap2))

    return DriftResult(
        score=score,
        tau_lo=edges[:-1],
        tau_hi=edges[1:],
        squared_gap=gap2,
        taus=mids,
        sens_v=sens_v,
        sens_t=sens_t,
        spec_v=spec_v,
        spec_t=spec_t,
        domain=domain,
    )


def wasserstein2(a, b) -> float:
    """2-Wasserstein distance between two empirical distributions.

    In one dimension W2^2 is the integral over q in [0, 1] of
    (Fa^{-1}(q) - Fb^{-1}(q))^2; both quantile functions are piecewise
    constant on the merged breakpoints {k/|a|} union {k/|b|}, so the
    integral is computed exactly. For equal sample sizes this reduces to
    the root-mean-square difference of the sorted samples.
    """
    a = np.sort(np.asarray(a, dtype=float))
    b = np.sort(np.asarray(b, dtype=float))
    if a.size == 0 or b.size == 0:
        raise EmptySample("wasserstein2 requires nonempty samples")
    if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
        raise ValueError("wasserstein2 requires finite values")

    n, m = len(a), len(b)
    q = np.union1d(np.arange(1, n) / n, np.arange(1, m) / m)
    edges = np.concatenate([[0.0], q, [1.0]])
    widths = np.diff(edges)
    mids = (edges[:-1] + edges[1:]) / 2.0
    ai = a[np.minimum((mids * n).astype(int), n - 1)]
    bi = b[np.minimum((mids * m).astype(int), m - 1)]
    return float(np.sqrt(np.sum(widths * (ai - bi) ** 2)))


# Fixed matrix layout: rows are the "from" samples, columns the "to"
# samples, so the diagonal holds within-cohort class separation and the
# off-diagonal holds cross-cohort same-class consistency.
WASSERSTEIN_ROW_LABELS = ("validation_negative", "test_positive")
WASSERSTEIN_COL_LABELS = ("validation_positive", "test_negative")


@dataclass(frozen=True)
class WassersteinMatrix:
    """2x2 W2 distances among the four class-conditional score samples.

    entries[0][0] = W2(V neg, V pos)   entries[0][1] = W2(V neg, T neg)
    entries[1][0] = W2(T pos, V pos)   entries[1][1] = W2(T pos, T neg)
    """

    entries: np.ndarray
    row_labels: tuple[str, str] = WASSERSTEIN_ROW_LABELS
    col_labels: tuple[str, str] = WASSERSTEIN_COL_LABELS


def distance_matrix(validation: Cohort, test: Cohort) -> WassersteinMatrix:
    validate_for_roc(validation)
    validate_for_roc(test)
    v0, v1 = validation.negative_scores, validation.positive_scores
    t0, t1 = test.negative_scores, test.positive_scores
    entries = np.array(
        [
            [wasserstein2(v0, v1), wasserstein2(v0, t0)],
            [wasserstein2(t1, v1), wasserstein2(t1, t0)],
        ]
    )
    return WassersteinMatrix(entries=entries)
