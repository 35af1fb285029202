class SurfaceBetaError(Exception):
    """Base error for the library."""


class PauliError(SurfaceBetaError, ValueError):
    """Raised for malformed Pauli operators (bad index, duplicate, size mismatch)."""


class CodeConstructionError(SurfaceBetaError, ValueError):
    """Raised when a surface code cannot be built from the given distances."""


class SyndromeError(SurfaceBetaError, ValueError):
    """Raised when a syndrome does not fit the code or an operator is not in the normalizer."""


class ChannelError(SurfaceBetaError, ValueError):
    """Raised for invalid channel probabilities or bias."""


class MatchingError(SurfaceBetaError):
    """Raised when a graph admits no perfect matching."""


class DecoderError(SurfaceBetaError):
    """Raised when a decoder cannot handle the given code or size."""


class BudgetExceededError(SurfaceBetaError):
    """Raised when an exhaustive job exceeds its decode budget."""


class ThresholdNotFoundError(SurfaceBetaError):
    """Raised when a logical error curve never crosses the shifted uncoded line."""


class ConfigError(SurfaceBetaError, ValueError):
    """Raised for invalid run configuration."""
