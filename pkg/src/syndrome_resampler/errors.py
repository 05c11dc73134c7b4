"""Root of the package exception hierarchy.

Every subpackage derives its own errors from :class:`ResamplerError` in its
``base.py`` so the CLI can catch a single type.
"""


class ResamplerError(Exception):
    """Base exception for all syndrome-resampler errors."""

    pass


class ExperimentError(ResamplerError):
    """Raised when a stage of an experiment run fails."""

    def __init__(self, stage: str, params: dict, cause: Exception):
        self.stage = stage
        self.params = params
        self.cause = cause
        rendered = ", ".join(f"{k}={v}" for k, v in params.items())
        super().__init__(f"stage '{stage}' failed ({rendered}): {cause}")


class DimensionError(ResamplerError):
    """Raised when a bit vector has the wrong length for its code."""

    pass


class ContractViolationError(ResamplerError):
    """Raised when a caller breaks an operation's precondition."""

    pass


class ResourceError(ResamplerError):
    """Raised when an exact computation would exceed its configured budget."""

    pass
