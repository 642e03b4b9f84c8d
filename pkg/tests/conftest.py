import numpy as np

from rocaudit import Cohort


def random_cohort(rng, max_size=50, ties=True, name="cohort", score_range=(0.0, 1.0)):
    """Random two-class cohort; with ties=True scores come from a coarse
    grid so tied values actually occur."""
    n = int(rng.integers(2, max_size + 1))
    labels = np.zeros(n, dtype=int)
    labels[: int(rng.integers(1, n))] = 1
    rng.shuffle(labels)
    lo, hi = score_range
    if ties and rng.random() < 0.5:
        levels = rng.integers(2, 8)
        scores = lo + (hi - lo) * rng.integers(0, levels, size=n) / (levels - 1)
    else:
        scores = rng.uniform(lo, hi, size=n)
    return Cohort(scores.astype(float), labels, name=name)
