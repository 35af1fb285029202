from .exceptions import (
    BudgetExceededError,
    ChannelError,
    CodeConstructionError,
    ConfigError,
    DecoderError,
    MatchingError,
    PauliError,
    SurfaceBetaError,
    SyndromeError,
    ThresholdNotFoundError,
)

__all__ = [
    "BudgetExceededError",
    "ChannelError",
    "CodeConstructionError",
    "ConfigError",
    "DecoderError",
    "MatchingError",
    "PauliError",
    "SurfaceBetaError",
    "SyndromeError",
    "ThresholdNotFoundError",
]
