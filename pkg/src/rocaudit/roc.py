"""Empirical ROC curve, AUROC and operating-point sensitivity/specificity.

Decision rule, fixed across the whole package: predict positive iff
score >= tau. AUROC uses the tie-corrected Mann-Whitney statistic
(ties credited 0.5), which equals the trapezoidal area under the
empirical ROC curve.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.stats import rankdata

from .cohort import Cohort, validate_for_roc

DECISION_RULE = "score>=tau"


@dataclass(frozen=True)
class SensSpec:
    sensitivity: float
    specificity: float


@dataclass(frozen=True)
class RocCurve:
    """Ordered (threshold, fpr, tpr) breakpoints of the empirical ROC.

    First point is (+inf, 0, 0); last is (-inf, 1, 1), i.e. "threshold
    below all scores". Interior thresholds are the distinct score values
    in strictly decreasing order; fpr and tpr are nondecreasing.
    """

    thresholds: np.ndarray
    fpr: np.ndarray
    tpr: np.ndarray

    def polyline(self) -> np.ndarray:
        """(fpr, tpr) pairs with consecutive duplicates removed.

        The geometric polyline is what monotone invariance preserves;
        duplicate vertices (e.g. the lowest score and the -inf sentinel)
        carry no geometry.
        """
        pts = np.column_stack([self.fpr, self.tpr])
        keep = np.ones(len(pts), dtype=bool)
        keep[1:] = np.any(pts[1:] != pts[:-1], axis=1)
        return pts[keep]


def sens_spec_at(cohort: Cohort, tau: float) -> SensSpec:
    """Sensitivity and specificity at threshold tau.

    sensitivity = fraction of positives with score >= tau,
    specificity = fraction of negatives with score < tau.
    """
    validate_for_roc(cohort)
    pos = cohort.positive_scores
    neg = cohort.negative_scores
    return SensSpec(
        sensitivity=float(np.count_nonzero(pos >= tau)) / len(pos),
        specificity=float(np.count_nonzero(neg < tau)) / len(neg),
    )


def roc_curve(cohort: Cohort) -> RocCurve:
    """Empirical ROC with a breakpoint at every distinct score."""
    validate_for_roc(cohort)
    pos = np.sort(cohort.positive_scores)
    neg = np.sort(cohort.negative_scores)
    distinct = np.unique(cohort.scores)[::-1]  # strictly decreasing

    thresholds = np.concatenate([[np.inf], distinct, [-np.inf]])
    # count of scores >= t via searchsorted on the ascending sorted arrays
    tpr = np.empty(len(thresholds))
    fpr = np.empty(len(thresholds))
    tpr[0], fpr[0] = 0.0, 0.0
    tpr[-1], fpr[-1] = 1.0, 1.0
    tpr[1:-1] = (len(pos) - np.searchsorted(pos, distinct, side="left")) / len(pos)
    fpr[1:-1] = (len(neg) - np.searchsorted(neg, distinct, side="left")) / len(neg)
    return RocCurve(thresholds=thresholds, fpr=fpr, tpr=tpr)


def auroc(cohort: Cohort) -> float:
    """Tie-corrected Mann-Whitney AUROC in O(n log n) by rank sums."""
    validate_for_roc(cohort)
    ranks = rankdata(cohort.scores)  # average ranks on ties
    pos_mask = cohort.labels == 1
    n_pos = int(np.count_nonzero(pos_mask))
    n_neg = len(cohort) - n_pos
    rank_sum = float(np.sum(ranks[pos_mask]))
    return (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)


def auroc_pairwise_oracle(cohort: Cohort) -> float:
    """Same statistic by the explicit O(P*N) double loop.

    Kept deliberately naive as an independent cross-check of auroc().
    """
    validate_for_roc(cohort)
    pos = [float(s) for s in cohort.positive_scores]
    neg = [float(s) for s in cohort.negative_scores]
    total = 0.0
    for p in pos:
        for n in neg:
            if p > n:
                total += 1.0
            elif p == n:
                total += 0.5
    return total / (len(pos) * len(neg))
