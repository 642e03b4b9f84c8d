"""Cohort ingestion: parse prediction/label files into validated cohorts.

A cohort is one dataset split (e.g. "validation" or "test") holding model
output scores paired with binary ground-truth labels. Scores may be any
finite reals; labels must be literally 0 or 1. Anything else is an error,
never coerced: silent coercion hides data bugs in exactly the evaluation
step this tool audits.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadLabel,
    BadScore,
    EmptyInput,
    MissingColumn,
    SingleClass,
)


@dataclass(frozen=True)
class Cohort:
    """Paired model outputs and ground-truth labels for one dataset split.

    Invariants (checked on construction): scores and labels have equal,
    nonzero length; every score is finite; every label is 0 or 1.
    """

    scores: np.ndarray
    labels: np.ndarray
    name: str = "cohort"

    def __post_init__(self):
        scores = np.asarray(self.scores, dtype=float)
        labels = np.asarray(self.labels, dtype=int)
        if scores.ndim != 1 or labels.ndim != 1:
            raise ValueError("scores and labels must be one-dimensional")
        if len(scores) != len(labels):
            raise ValueError("scores and labels must have equal length")
        if len(scores) == 0:
            raise EmptyInput("cohort has no samples")
        if not np.all(np.isfinite(scores)):
            bad = int(np.flatnonzero(~np.isfinite(scores))[0])
            raise BadScore(bad + 1, scores[bad])
        if not np.all((labels == 0) | (labels == 1)):
            bad = int(np.flatnonzero((labels != 0) & (labels != 1))[0])
            raise BadLabel(bad + 1, labels[bad])
        object.__setattr__(self, "scores", scores)
        object.__setattr__(self, "labels", labels)
        self.scores.setflags(write=False)
        self.labels.setflags(write=False)

    def __len__(self) -> int:
        return len(self.scores)

    @property
    def positive_scores(self) -> np.ndarray:
        return self.scores[self.labels == 1]

    @property
    def negative_scores(self) -> np.ndarray:
        return self.scores[self.labels == 0]


@dataclass(frozen=True)
class IngestSchema:
    """Column configuration for cohort files.

    format is "csv" (comma separated, header row) or "jsonl" (one JSON
    object per line).
    """

    score_column: str = "score"
    label_column: str = "label"
    format: str = "csv"

    def __post_init__(self):
        if not self.score_column or not self.label_column:
            raise ValueError("column names must be nonempty")
        if self.score_column == self.label_column:
            raise ValueError("score and label columns must be distinct")
        if self.format not in ("csv", "jsonl"):
            raise ValueError(f"unknown format {self.format!r}")


def _parse_score(token, row: int) -> float:
    try:
        value = float(token)
    except (TypeError, ValueError):
        raise BadScore(row, token) from None
    if not math.isfinite(value):
        raise BadScore(row, token)
    return value


def parse_cohort(source, schema: IngestSchema = IngestSchema(), name: str = "cohort") -> Cohort:
    """Parse a byte stream (or bytes) into a Cohort, preserving row order.

    CSV labels must be the literal tokens "0"/"1"; JSONL labels the JSON
    numbers 0/1. Row numbers in errors are 1-based over data rows.
    """
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
    text = data.decode("utf-8")

    scores: list[float] = []
    labels: list[int] = []

    if schema.format == "csv":
        reader = csv.reader(io.StringIO(text))
        try:
            header = next(reader)
        except StopIteration:
            raise EmptyInput("no header row") from None
        header = [h.strip() for h in header]
        for col in (schema.label_column, schema.score_column):
            if col not in header:
                raise MissingColumn(f"column {col!r} not in header {header}")
        label_idx = header.index(schema.label_column)
        score_idx = header.index(schema.score_column)
        for row_num, row in enumerate(reader, start=1):
            if not row or (len(row) == 1 and not row[0].strip()):
                continue  # skip blank lines
            if len(row) <= max(label_idx, score_idx):
                raise MissingColumn(f"row {row_num}: too few fields")
            label_tok = row[label_idx].strip()
            if label_tok not in ("0", "1"):
                raise BadLabel(row_num, row[label_idx])
            labels.append(int(label_tok))
            scores.append(_parse_score(row[score_idx].strip(), row_num))
    else:  # jsonl
        row_num = 0
        for line in text.splitlines():
            if not line.strip():
                continue
            row_num += 1
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise BadScore(row_num, line.strip()) from exc
            if not isinstance(obj, dict):
                raise BadScore(row_num, obj)
            if schema.label_column not in obj:
                raise MissingColumn(f"row {row_num}: key {schema.label_column!r} absent")
            if schema.score_column not in obj:
                raise MissingColumn(f"row {row_num}: key {schema.score_column!r} absent")
            label = obj[schema.label_column]
            # bool is an int subclass; reject it explicitly
            if isinstance(label, bool) or not isinstance(label, (int, float)) or label not in (0, 1):
                raise BadLabel(row_num, label)
            score = obj[schema.score_column]
            if isinstance(score, bool) or not isinstance(score, (int, float)):
                raise BadScore(row_num, score)
            labels.append(int(label))
            scores.append(_parse_score(score, row_num))

    if not scores:
        raise EmptyInput("zero data rows")
    return Cohort(np.array(scores, dtype=float), np.array(labels, dtype=int), name=name)


def validate_for_roc(cohort: Cohort) -> Cohort:
    """Return the cohort unchanged if it has at least one sample of each
    class; raise SingleClass otherwise (the ROC is undefined without both)."""
    n_pos = int(np.sum(cohort.labels == 1))
    if n_pos == 0 or n_pos == len(cohort):
        raise SingleClass(
            f"cohort {cohort.name!r} contains only label "
            f"{int(cohort.labels[0])}; ROC/AUROC undefined"
        )
    return cohort
