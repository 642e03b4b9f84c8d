"""Exception hierarchy for rocaudit.

Data-quality problems raise subclasses of :class:`AuditError` so callers
(notably the CLI) can distinguish them from programming errors.
"""


class AuditError(Exception):
    """Base class for all data / configuration errors raised by rocaudit."""


class MissingColumn(AuditError):
    """A configured score or label column is absent from the input."""


class BadLabel(AuditError):
    """A label token is not literally 0 or 1."""

    def __init__(self, row: int, token: object):
        self.row = row
        self.token = token
        super().__init__(f"row {row}: label must be 0 or 1, got {token!r}")


class BadScore(AuditError):
    """A score is non-numeric or non-finite."""

    def __init__(self, row: int, token: object):
        self.row = row
        self.token = token
        super().__init__(f"row {row}: score must be a finite number, got {token!r}")


class EmptyInput(AuditError):
    """The input contains no data rows."""


class SingleClass(AuditError):
    """All labels are identical, so the ROC (and everything built on it)
    is undefined."""


class ZeroBaseline(AuditError):
    """Baseline AUROC is zero, making the 1/AUROC normalization of the
    robustness scores undefined."""


class ScoreOutsideDomain(AuditError):
    """A score lies outside the threshold integration domain; integrating
    anyway would silently ignore operating points."""


class EmptySample(AuditError):
    """A sample set handed to a distance computation is empty."""


class IoFailure(AuditError):
    """An output file or directory could not be written."""
