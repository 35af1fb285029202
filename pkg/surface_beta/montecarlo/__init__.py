from .engine import SimEstimate, block_rng, estimates_frame, simulate, sweep
from .stats import wilson_interval

__all__ = ["SimEstimate", "block_rng", "estimates_frame", "simulate", "sweep", "wilson_interval"]
