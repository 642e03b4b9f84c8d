"""Command-line front end.

Subcommands:
  single   audit one cohort (AUROC + robustness scores)
  compare  audit a validation/test pair (adds drift score and the
           Wasserstein class-distance matrix)

Exit status: 0 success, 1 data error (bad label, single-class cohort,
score outside the threshold domain, zero baseline AUROC, ...), 2 usage
error. Runs are deterministic: fixed inputs, flags and seed give
byte-identical report and plot files.
"""

from __future__ import annotations

import argparse
import os
import sys

from .cohort import IngestSchema, parse_cohort, validate_for_roc
from .drift import ThresholdDomain, distance_matrix, drift_score
from .errors import AuditError
from .report import Comparison, build_report, emit_json, emit_plot_data, score_cohort
from .robustness import (
    DEFAULT_BIAS_RANGE,
    DEFAULT_GRID_POINTS,
    DEFAULT_NOISE_RANGE,
    PerturbationSpec,
)


def _range(text: str) -> tuple[float, float]:
    try:
        lo_s, hi_s = text.split(":")
        lo, hi = float(lo_s), float(hi_s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if not lo < hi:
        raise argparse.ArgumentTypeError(f"need LO < HI in {text!r}")
    return lo, hi


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--score-col", default="score", help="score column/key (default: score)")
    p.add_argument("--label-col", default="label", help="label column/key (default: label)")
    p.add_argument("--format", choices=["csv", "jsonl"], default="csv")
    p.add_argument(
        "--bias-range", type=_range,
        default=DEFAULT_BIAS_RANGE, metavar="LO:HI",
        help="bias sigma range (default 0:1)",
    )
    p.add_argument(
        "--noise-range", type=_range,
        default=DEFAULT_NOISE_RANGE, metavar="LO:HI",
        help="noise sigma range (default 0:0.5)",
    )
    p.add_argument("--grid", type=int, default=DEFAULT_GRID_POINTS, metavar="N",
                   help="curve sampling resolution (default 101)")
    p.add_argument("--mc-draws", type=int, default=0, metavar="N",
                   help="Monte Carlo noise cross-check draws (0 = off)")
    p.add_argument("--seed", type=int, default=0, metavar="N",
                   help="Monte Carlo seed (default 0)")
    p.add_argument("--tau-range", type=_range, default=(0.0, 1.0), metavar="LO:HI",
                   help="drift threshold domain (default 0:1)")
    p.add_argument("--allow-out-of-domain", action="store_true",
                   help="integrate drift even if scores fall outside --tau-range")
    p.add_argument("--out", metavar="FILE",
                   help="write the JSON report here (default: standard output)")
    p.add_argument("--plots", metavar="DIR", help="emit CSV/SVG plot artifacts to DIR")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rocaudit",
        description="Audit binary-classifier generalisability from raw model outputs.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    single = sub.add_parser("single", help="audit one cohort")
    single.add_argument("--input", required=True, metavar="FILE")
    _add_common(single)

    compare = sub.add_parser("compare", help="audit a validation/test pair")
    compare.add_argument("--validation", required=True, metavar="FILE")
    compare.add_argument("--test", required=True, metavar="FILE")
    _add_common(compare)

    return parser


def _load(path: str, schema: IngestSchema, name: str):
    with open(path, "rb") as fh:
        return validate_for_roc(parse_cohort(fh, schema, name=name))


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else int(exc.code or 0)

    schema = IngestSchema(
        score_column=args.score_col, label_column=args.label_col, format=args.format
    )
    bias_spec = PerturbationSpec(
        "bias", sigma_min=args.bias_range[0], sigma_max=args.bias_range[1],
        grid_points=args.grid,
    )
    noise_spec = PerturbationSpec(
        "noise", sigma_min=args.noise_range[0], sigma_max=args.noise_range[1],
        grid_points=args.grid, mc_draws=args.mc_draws, mc_seed=args.seed,
    )

    try:
        if args.subcommand == "single":
            name = os.path.splitext(os.path.basename(args.input))[0]
            cohorts = [_load(args.input, schema, name)]
            comparison = None
        else:
            cohorts = [
                _load(args.validation, schema, "validation"),
                _load(args.test, schema, "test"),
            ]
            domain = ThresholdDomain(*args.tau_range)
            comparison = Comparison(
                drift=drift_score(
                    cohorts[0], cohorts[1], domain,
                    allow_out_of_domain=args.allow_out_of_domain,
                ),
                wasserstein=distance_matrix(cohorts[0], cohorts[1]),
            )

        scored = [score_cohort(c, bias_spec, noise_spec) for c in cohorts]
        report = build_report(scored, comparison)
        payload = emit_json(report)

        if args.out:
            with open(args.out, "wb") as fh:
                fh.write(payload)
        else:
            sys.stdout.buffer.write(payload)

        if args.plots:
            emit_plot_data(report, args.plots)

        if args.out:
            for cs in scored:
                print(
                    f"{cs.cohort.name}: auroc={cs.auroc:.6f} "
                    f"bias_score={cs.bias.score:.6f} noise_score={cs.noise.score:.6f}"
                )
            if comparison is not None:
                print(f"drift_score={comparison.drift.score:.6f}")
            print(f"report written to {args.out}")
    except AuditError as exc:
        loc = args.input if args.subcommand == "single" else f"{args.validation}, {args.test}"
        print(f"{type(exc).__name__}: {exc} (inputs: {loc})", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"IoFailure: {exc}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
