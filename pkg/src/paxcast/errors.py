"""Exception types shared across the package.

Validation problems (bad data, bad config) are ``ValueError`` subclasses so
the CLI can map them to exit code 1; numeric failures during training map to
exit code 2.
"""


class DataError(ValueError):
    """Raised when an input series or CSV file fails validation."""


class ConfigError(ValueError):
    """Raised when a run configuration violates a downstream precondition."""


class TrainingDivergedError(RuntimeError):
    """Raised when training encounters a non-finite loss."""
