"""Exception hierarchy shared across the package."""


class ChronocheckError(Exception):
    """Base class for all package errors."""


class ValidationError(ChronocheckError, ValueError):
    """An input violates a documented invariant (range, shape, arity)."""


class DataError(ChronocheckError):
    """A dataset, manifest, score file or split request is unusable."""


class CheckpointError(ChronocheckError):
    """A weights file is corrupt or does not match the target model."""


class NumericError(ChronocheckError):
    """Training or evaluation produced non-finite values."""


class UnsupportedOperationError(ChronocheckError):
    """The requested operation needs a capability the model was built without."""
