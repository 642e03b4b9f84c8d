"""rocaudit: audit binary-classifier generalisability from raw model outputs.

Core scores: ROC/AUROC, robustness to bias and to noise (normalized
integrals of perturbed AUROC), cross-cohort sensitivity/specificity
drift, and the 2-Wasserstein class-distance matrix.
"""

from .cohort import Cohort, IngestSchema, parse_cohort, validate_for_roc
from .drift import (
    DriftResult,
    ThresholdDomain,
    WassersteinMatrix,
    distance_matrix,
    drift_score,
    wasserstein2,
)
from .errors import (
    AuditError,
    BadLabel,
    BadScore,
    EmptyInput,
    EmptySample,
    IoFailure,
    MissingColumn,
    ScoreOutsideDomain,
    SingleClass,
    ZeroBaseline,
)
from .report import (
    CohortScores,
    Comparison,
    Report,
    build_report,
    emit_json,
    emit_plot_data,
    report_dict,
    score_cohort,
)
from .robustness import (
    PerturbationSpec,
    RobustnessResult,
    bias_perturb,
    bias_robustness,
    monte_carlo_noise_auroc,
    noise_expected_auroc,
    noise_robustness,
)
from .roc import (
    DECISION_RULE,
    RocCurve,
    SensSpec,
    auroc,
    auroc_pairwise_oracle,
    roc_curve,
    sens_spec_at,
)

__all__ = [
    "AuditError",
    "BadLabel",
    "BadScore",
    "Cohort",
    "CohortScores",
    "Comparison",
    "DECISION_RULE",
    "DriftResult",
    "EmptyInput",
    "EmptySample",
    "IngestSchema",
    "IoFailure",
    "MissingColumn",
    "PerturbationSpec",
    "Report",
    "RobustnessResult",
    "RocCurve",
    "ScoreOutsideDomain",
    "SensSpec",
    "SingleClass",
    "ThresholdDomain",
    "WassersteinMatrix",
    "ZeroBaseline",
    "auroc",
    "auroc_pairwise_oracle",
    "bias_perturb",
    "bias_robustness",
    "build_report",
    "distance_matrix",
    "drift_score",
    "emit_json",
    "emit_plot_data",
    "monte_carlo_noise_auroc",
    "noise_expected_auroc",
    "noise_robustness",
    "parse_cohort",
    "report_dict",
    "roc_curve",
    "score_cohort",
    "sens_spec_at",
    "validate_for_roc",
    "wasserstein2",
]

__version__ = "0.1.0"
