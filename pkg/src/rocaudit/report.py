"""Report assembly and artifact emission.

The JSON report (schema 1.0) is deterministic: keys appear in a fixed
documented order and every real is rendered with 17 significant digits,
which guarantees round-trip through text. Plot artifacts are data-first:
CSV files carry the exact in-memory numbers; the ROC SVG is a convenience
rendering with the polyline coloured by threshold.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .cohort import Cohort
from .drift import DriftResult, WassersteinMatrix
from .errors import IoFailure
from .robustness import (
    PerturbationSpec,
    RobustnessResult,
    bias_robustness,
    monte_carlo_noise_auroc,
    noise_robustness,
)
from .roc import DECISION_RULE, RocCurve, auroc, roc_curve

SCHEMA_VERSION = "1.0"


@dataclass(frozen=True)
class CohortScores:
    """All single-cohort results for one cohort."""

    cohort: Cohort
    auroc: float
    roc: RocCurve
    bias: RobustnessResult
    noise: RobustnessResult
    mc_noise_auroc: float | None = None  # Monte Carlo check at noise sigma_max


@dataclass(frozen=True)
class Comparison:
    drift: DriftResult
    wasserstein: WassersteinMatrix


@dataclass(frozen=True)
class Report:
    cohorts: list[CohortScores]
    comparison: Comparison | None
    schema_version: str = SCHEMA_VERSION
    decision_rule: str = DECISION_RULE


def score_cohort(
    cohort: Cohort,
    bias_spec: PerturbationSpec,
    noise_spec: PerturbationSpec,
) -> CohortScores:
    """Compute every single-cohort score for one cohort."""
    mc = None
    if noise_spec.mc_draws > 0:
        mc = monte_carlo_noise_auroc(
            cohort, noise_spec.sigma_max, noise_spec.mc_draws, noise_spec.mc_seed
        )
    return CohortScores(
        cohort=cohort,
        auroc=auroc(cohort),
        roc=roc_curve(cohort),
        bias=bias_robustness(cohort, bias_spec),
        noise=noise_robustness(cohort, noise_spec),
        mc_noise_auroc=mc,
    )


def build_report(cohorts: list[CohortScores], comparison: Comparison | None = None) -> Report:
    if comparison is not None and len(cohorts) != 2:
        raise ValueError("a comparison requires exactly two cohorts")
    return Report(cohorts=list(cohorts), comparison=comparison)


# ---------------------------------------------------------------------------
# deterministic JSON
# ---------------------------------------------------------------------------


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return f"{float(x):.17g}"
    raise TypeError(f"unsupported scalar {type(x)}")


def _json(value, indent: int) -> str:
    pad = "  " * indent
    if value is None:
        return "null"
    if isinstance(value, str):
        # report strings are plain identifiers; escape the JSON specials anyway
        escaped = value.replace("\\", "\\\\").replace('"', '\\"')
        return f'"{escaped}"'
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f'{pad}  "{k}": {_json(v, indent + 1)}' for k, v in value.items()]
        return "{\n" + ",\n".join(items) + f"\n{pad}}}"
    if isinstance(value, (list, tuple)):
        if len(value) == 0:
            return "[]"
        items = [f"{pad}  {_json(v, indent + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + f"\n{pad}]"
    return _fmt(value)


def _robustness_dict(r: RobustnessResult) -> dict:
    return {
        "sigma_min": r.spec.sigma_min,
        "sigma_max": r.spec.sigma_max,
        "grid_points": int(len(r.sigmas)),
        "baseline_auroc": r.baseline_auroc,
        "raw_integral": r.raw_integral,
        "score": r.score,
        "normalized_score": r.normalized_score,
    }


def report_dict(report: Report) -> dict:
    """The report as plain nested dicts, keys in the documented order."""
    bias_spec = report.cohorts[0].bias.spec
    noise_spec = report.cohorts[0].noise.spec
    out = {
        "schema_version": report.schema_version,
        "decision_rule": report.decision_rule,
        "config": {
            "bias_sigma_min": bias_spec.sigma_min,
            "bias_sigma_max": bias_spec.sigma_max,
            "noise_sigma_min": noise_spec.sigma_min,
            "noise_sigma_max": noise_spec.sigma_max,
            "grid_points": bias_spec.grid_points,
            "mc_draws": noise_spec.mc_draws,
            "mc_seed": noise_spec.mc_seed,
        },
        "cohorts": [],
    }
    if report.comparison is not None:
        out["config"]["tau_min"] = report.comparison.drift.domain.tau_min
        out["config"]["tau_max"] = report.comparison.drift.domain.tau_max
    for cs in report.cohorts:
        entry = {
            "name": cs.cohort.name,
            "n_positive": int(np.count_nonzero(cs.cohort.labels == 1)),
            "n_negative": int(np.count_nonzero(cs.cohort.labels == 0)),
            "auroc": cs.auroc,
            "bias_robustness": _robustness_dict(cs.bias),
            "noise_robustness": _robustness_dict(cs.noise),
        }
        if cs.mc_noise_auroc is not None:
            entry["mc_noise_auroc_at_sigma_max"] = cs.mc_noise_auroc
        out["cohorts"].append(entry)
    if report.comparison is not None:
        d = report.comparison.drift
        w = report.comparison.wasserstein
        out["comparison"] = {
            "drift_score": d.score,
            "drift_segments": [
                {"tau_lo": lo, "tau_hi": hi, "squared_gap": g}
                for lo, hi, g in zip(d.tau_lo, d.tau_hi, d.squared_gap)
            ],
            "wasserstein": {
                "row_labels": list(w.row_labels),
                "col_labels": list(w.col_labels),
                "entries": [[w.entries[0, 0], w.entries[0, 1]],
                            [w.entries[1, 0], w.entries[1, 1]]],
            },
        }
    return out


def emit_json(report: Report) -> bytes:
    """Deterministic, newline-terminated JSON bytes for the report."""
    return (_json(report_dict(report), 0) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# plot artifacts: CSV data series plus an SVG ROC rendering
# ---------------------------------------------------------------------------


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise IoFailure(f"cannot write {path}: {exc}") from exc


def _csv_rows(header: list[str], columns: list[np.ndarray]) -> str:
    lines = [",".join(header)]
    for row in zip(*columns):
        lines.append(",".join(_fmt(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def _ramp_color(tau: float, lo: float, hi: float) -> str:
    """Linear colour ramp: red at tau = lo, blue at tau = hi."""
    if hi > lo:
        t = min(1.0, max(0.0, (tau - lo) / (hi - lo)))
    else:
        t = 0.5
    return f"rgb({round(255 * (1 - t))},0,{round(255 * t)})"


def roc_svg(curve: RocCurve, title: str) -> str:
    """ROC polyline as SVG, one path per segment, coloured by threshold.

    The colour ramp runs linearly from red at the lowest finite threshold
    to blue at the highest; sentinel thresholds are clamped.
    """
    size, margin = 440, 40
    plot = size - 2 * margin

    def px(fpr: float) -> float:
        return margin + fpr * plot

    def py(tpr: float) -> float:
        return size - margin - tpr * plot

    finite = curve.thresholds[np.isfinite(curve.thresholds)]
    lo = float(finite.min()) if len(finite) else 0.0
    hi = float(finite.max()) if len(finite) else 1.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        "<metadata>ROC polyline coloured by threshold tau; linear ramp "
        f"from red (tau={_fmt(lo)}) to blue (tau={_fmt(hi)}), sentinels clamped."
        "</metadata>",
        f'<rect x="{margin}" y="{margin}" width="{plot}" height="{plot}" '
        'fill="white" stroke="#444" stroke-width="1"/>',
        f'<line x1="{px(0)}" y1="{py(0)}" x2="{px(1)}" y2="{py(1)}" '
        'stroke="#bbb" stroke-width="1" stroke-dasharray="4 4"/>',
        f'<text x="{size / 2:.0f}" y="{margin - 12}" text-anchor="middle" '
        f'font-size="14">{title}</text>',
        f'<text x="{size / 2:.0f}" y="{size - 8}" text-anchor="middle" '
        'font-size="12">false positive rate</text>',
        f'<text x="14" y="{size / 2:.0f}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 14 {size / 2:.0f})">true positive rate</text>',
    ]
    for i in range(len(curve.thresholds) - 1):
        tau = curve.thresholds[i + 1]
        tau = min(max(float(tau), lo), hi) if np.isfinite(tau) else (lo if tau < 0 else hi)
        color = _ramp_color(tau, lo, hi)
        parts.append(
            f'<path d="M {px(curve.fpr[i]):.3f} {py(curve.tpr[i]):.3f} '
            f'L {px(curve.fpr[i + 1]):.3f} {py(curve.tpr[i + 1]):.3f}" '
            f'stroke="{color}" stroke-width="2" fill="none"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def emit_plot_data(report: Report, outdir: str) -> list[str]:
    """Write CSV/SVG artifacts to outdir; returns the written paths."""
    try:
        os.makedirs(outdir, exist_ok=True)
    except OSError as exc:
        raise IoFailure(f"cannot create {outdir}: {exc}") from exc

    written = []
    for cs in report.cohorts:
        name = cs.cohort.name
        p = os.path.join(outdir, f"roc_{name}.csv")
        _write(p, _csv_rows(["tau", "fpr", "tpr"], [cs.roc.thresholds, cs.roc.fpr, cs.roc.tpr]))
        written.append(p)
        p = os.path.join(outdir, f"roc_{name}.svg")
        _write(p, roc_svg(cs.roc, f"ROC: {name}"))
        written.append(p)
        for kind, result in (("bias", cs.bias), ("noise", cs.noise)):
            p = os.path.join(outdir, f"robustness_{name}_{kind}.csv")
            _write(p, _csv_rows(["sigma", "auroc"], [result.sigmas, result.aurocs]))
            written.append(p)

    if report.comparison is not None:
        d = report.comparison.drift
        p = os.path.join(outdir, "drift.csv")
        _write(
            p,
            _csv_rows(
                ["tau", "sens_v", "sens_t", "spec_v", "spec_t", "squared_gap"],
                [d.taus, d.sens_v, d.sens_t, d.spec_v, d.spec_t, d.squared_gap],
            ),
        )
        written.append(p)
        w = report.comparison.wasserstein
        lines = ["," + ",".join(w.col_labels)]
        for label, row in zip(w.row_labels, w.entries):
            lines.append(label + "," + ",".join(_fmt(float(v)) for v in row))
        p = os.path.join(outdir, "wasserstein.csv")
        _write(p, "\n".join(lines) + "\n")
        written.append(p)
    return written
