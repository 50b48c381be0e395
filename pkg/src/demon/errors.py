"""Exception types shared across the package."""


class DemonError(Exception):
    """Base class for all errors raised by this package."""


class GraphParseError(DemonError):
    """A text input file could not be parsed; carries the offending line number."""

    def __init__(self, path, line_no: int, message: str):
        self.path = str(path)
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {message}")


class DomainError(DemonError):
    """An operation was called with arguments outside its domain."""


class DeltaError(DemonError):
    """An incremental update batch is invalid (e.g. contains deletions)."""


class UndefinedMetricError(DemonError):
    """A metric has no defined value on the given inputs (zero denominator)."""
