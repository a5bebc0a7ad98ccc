"""Weighted p-radial distributions on lp-balls and matrix p-balls.

Exact samplers for cone / uniform / radially mixed laws on the unit
lp-ball, MCMC samplers for repulsion-weighted base densities, spectral
samplers for matrix p-balls, and numerical rate functions for the
associated large-deviation limits.
"""

__version__ = "0.1.0"

from .rng import RngStream
from .distributions import RadialLawW
from .weights import WeightFn
from .measures import MeasureRep
from .rates import RateFnSpec

__all__ = [
    "RngStream",
    "RadialLawW",
    "WeightFn",
    "MeasureRep",
    "RateFnSpec",
]
