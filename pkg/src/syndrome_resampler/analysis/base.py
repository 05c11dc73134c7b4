"""Analysis errors."""

from syndrome_resampler.errors import ResamplerError


class AnalysisError(ResamplerError):
    """Base exception for statistical post-processing."""

    pass


class DegenerateInputError(AnalysisError):
    """Raised when the input cannot support the requested analysis."""

    pass


class FitFailureError(AnalysisError):
    """Raised when no optimizer restart converges."""

    def __init__(self, message: str, residual: float):
        self.residual = residual
        super().__init__(f"{message} (best residual {residual:.6g})")


class NoCrossingError(AnalysisError):
    """Raised when two curves never change order on their common grid."""

    pass


class AmbiguousCrossingError(AnalysisError):
    """Raised when two curves cross more than once."""

    def __init__(self, crossings: list[float]):
        self.crossings = crossings
        rendered = ", ".join(f"{c:.6g}" for c in crossings)
        super().__init__(f"curves cross {len(crossings)} times: {rendered}")
