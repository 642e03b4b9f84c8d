"""Single-cohort discrepancy scores: robustness to bias and to noise.

Both scores are normalized integrals of the perturbed AUROC over the
perturbation strength sigma:

    score = (1 / A(0)) * integral_{sigma_min}^{sigma_max} A(sigma) dsigma

where A(sigma) is the AUROC after applying the perturbation at strength
sigma. The bias perturbation shifts every positive-class score down by
sigma (negatives untouched); the noise perturbation diffuses every score
with i.i.d. Gaussian noise of standard deviation sigma, for which the
expected AUROC has the closed form

    E[A(sigma)] = mean over (pos, neg) pairs of Phi((y_i - y_j) / (sigma*sqrt(2)))

since the difference of two perturbed scores is Gaussian with variance
2*sigma^2. The reported `score` depends on the chosen [sigma_min, sigma_max];
`normalized_score` additionally divides by the interval width so results
are comparable across configurations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import simpson
from scipy.special import ndtr

from .cohort import Cohort, validate_for_roc
from .errors import ZeroBaseline
from .roc import auroc

DEFAULT_BIAS_RANGE = (0.0, 1.0)
DEFAULT_NOISE_RANGE = (0.0, 0.5)
DEFAULT_GRID_POINTS = 101


@dataclass(frozen=True)
class PerturbationSpec:
    """Configuration of one robustness sweep.

    kind is "bias" or "noise". sigma_max defaults to 1.0 for bias and 0.5
    for noise: for probability-scaled outputs a bias of 1.0 is the maximal
    meaningful shift, and noise at sigma = 0.5 already saturates most
    [0,1]-ranged cohorts toward AUROC 0.5. grid_points controls the
    resolution of the reported curve (and the Simpson quadrature for
    noise). mc_draws > 0 enables the Monte Carlo cross-check.
    """

    kind: str
    sigma_min: float = 0.0
    sigma_max: float | None = None
    grid_points: int = DEFAULT_GRID_POINTS
    mc_draws: int = 0
    mc_seed: int = 0

    def __post_init__(self):
        if self.kind not in ("bias", "noise"):
            raise ValueError(f"unknown perturbation kind {self.kind!r}")
        if self.sigma_max is None:
            default = DEFAULT_BIAS_RANGE if self.kind == "bias" else DEFAULT_NOISE_RANGE
            object.__setattr__(self, "sigma_max", default[1])
        if self.sigma_min < 0:
            raise ValueError("sigma_min must be >= 0")
        if not self.sigma_min < self.sigma_max:
            raise ValueError("sigma_min must be strictly below sigma_max")
        if self.grid_points < 2:
            raise ValueError("grid_points must be >= 2")
        if self.mc_draws < 0:
            raise ValueError("mc_draws must be >= 0")


@dataclass(frozen=True)
class RobustnessResult:
    baseline_auroc: float
    sigmas: np.ndarray  # strictly increasing curve abscissae
    aurocs: np.ndarray  # perturbed AUROC at each sigma, in [0, 1]
    raw_integral: float  # integral of A(sigma) over [sigma_min, sigma_max]
    score: float  # raw_integral / baseline_auroc
    normalized_score: float  # score / (sigma_max - sigma_min)
    spec: PerturbationSpec


def bias_perturb(cohort: Cohort, sigma: float) -> Cohort:
    """Shift every positive-class score down by sigma; negatives unchanged."""
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    scores = cohort.scores.copy()
    scores[cohort.labels == 1] -= sigma
    return Cohort(scores, cohort.labels, name=cohort.name)


def _baseline(cohort: Cohort) -> float:
    base = auroc(cohort)
    if base == 0.0:
        raise ZeroBaseline(
            f"cohort {cohort.name!r} has baseline AUROC 0; the 1/AUROC "
            "normalization is undefined"
        )
    return base


def bias_robustness(cohort: Cohort, spec: PerturbationSpec) -> RobustnessResult:
    """Bias sweep with the integral evaluated exactly in closed form.

    A(sigma) under the bias shift is the fraction of (pos, neg) pairs with
    y_i - sigma > y_j (ties at a measure-zero set of sigmas), so A is a
    step function of sigma and

        integral = mean over pairs of (clamp(y_i - y_j, smin, smax) - smin).

    The uniform grid is sampled only for the reported curve.
    """
    if spec.kind != "bias":
        raise ValueError("spec.kind must be 'bias'")
    validate_for_roc(cohort)
    base = _baseline(cohort)

    diffs = cohort.positive_scores[:, None] - cohort.negative_scores[None, :]
    raw = float(np.mean(np.clip(diffs, spec.sigma_min, spec.sigma_max) - spec.sigma_min))

    sigmas = np.linspace(spec.sigma_min, spec.sigma_max, spec.grid_points)
    aurocs = np.array([auroc(bias_perturb(cohort, s)) for s in sigmas])

    score = raw / base
    return RobustnessResult(
        baseline_auroc=base,
        sigmas=sigmas,
        aurocs=aurocs,
        raw_integral=raw,
        score=score,
        normalized_score=score / (spec.sigma_max - spec.sigma_min),
        spec=spec,
    )


def noise_expected_auroc(cohort: Cohort, sigma: float) -> float:
    """Expected AUROC when every score gets i.i.d. N(0, sigma^2) noise.

    Per-pair expectation of the order indicator: Phi(gap / (sigma*sqrt(2))).
    Ties have probability zero under the diffusion. sigma = 0 returns the
    unperturbed AUROC.
    """
    if sigma < 0:
        raise ValueError("sigma must be >= 0")
    validate_for_roc(cohort)
    if sigma == 0.0:
        return auroc(cohort)
    diffs = cohort.positive_scores[:, None] - cohort.negative_scores[None, :]
    return float(np.mean(ndtr(diffs / (sigma * math.sqrt(2.0)))))


def noise_robustness(cohort: Cohort, spec: PerturbationSpec) -> RobustnessResult:
    """Noise sweep integrated by composite Simpson on the uniform grid.

    The grid is forced odd (one point added if needed) so the composite
    rule applies cleanly.
    """
    if spec.kind != "noise":
        raise ValueError("spec.kind must be 'noise'")
    validate_for_roc(cohort)
    base = _baseline(cohort)

    n = spec.grid_points if spec.grid_points % 2 == 1 else spec.grid_points + 1
    sigmas = np.linspace(spec.sigma_min, spec.sigma_max, n)
    aurocs = np.array([noise_expected_auroc(cohort, s) for s in sigmas])
    raw = float(simpson(aurocs, x=sigmas))

    score = raw / base
    return RobustnessResult(
        baseline_auroc=base,
        sigmas=sigmas,
        aurocs=aurocs,
        raw_integral=raw,
        score=score,
        normalized_score=score / (spec.sigma_max - spec.sigma_min),
        spec=spec,
    )


def monte_carlo_noise_auroc(cohort: Cohort, sigma: float, draws: int, seed: int) -> float:
    """Monte Carlo estimate of the diffused AUROC: mean over `draws`
    replications of the AUROC of (scores + N(0, sigma^2) noise).

    Deterministic for fixed (seed, draws, sigma, cohort): the noise comes
    from a counter-based Philox stream keyed by the seed and is consumed
    in a fixed chunk order, independent of any parallelism.
    """
    if draws < 1:
        raise ValueError("draws must be >= 1")
    if sigma <= 0:
        raise ValueError("sigma must be > 0")
    validate_for_roc(cohort)

    scores = cohort.scores
    pos_mask = cohort.labels == 1
    n_pos = int(np.count_nonzero(pos_mask))
    n_neg = len(cohort) - n_pos
    n = len(cohort)

    rng = np.random.Generator(np.random.Philox(key=seed))
    chunk = max(1, min(draws, 20_000_000 // n))
    per_draw = np.empty(draws)
    done = 0
    while done < draws:
        m = min(chunk, draws - done)
        noisy = scores[None, :] + rng.normal(0.0, sigma, size=(m, n))
        # ordinal ranks per row; ties have probability zero
        order = np.argsort(noisy, axis=1, kind="stable")
        ranks = np.empty_like(order)
        rows = np.arange(m)[:, None]
        ranks[rows, order] = np.arange(1, n + 1)[None, :]
        rank_sum = ranks[:, pos_mask].sum(axis=1, dtype=np.float64)
        per_draw[done : done + m] = (rank_sum - n_pos * (n_pos + 1) / 2.0) / (n_pos * n_neg)
        done += m
    return float(np.mean(per_draw))
