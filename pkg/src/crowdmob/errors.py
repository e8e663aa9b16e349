"""Exception types shared across the pipeline."""


class CrowdmobError(Exception):
    """Base class for errors raised by this package."""


class DatasetFormatError(CrowdmobError):
    """Input data is unusable, e.g. too many malformed lines.

    ``line_number`` is the 1-based number of the first offending line when
    known.
    """

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


class EmptyDatabaseError(CrowdmobError):
    """The user has no day sequences, so there is nothing to mine."""
