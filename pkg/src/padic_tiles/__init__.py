"""Exact tiling analysis in the p-adic integers.

Verify tiling pairs ``(Ω, T)`` of ``Z_p``, compute Fourier transforms of
compact open sets and finite point measures as exact sums of roots of
unity, and recover the compact open set a bounded tile must be.
"""

from .cyclotomic import CyclotomicSum
from .errors import AmbiguousCellError, DomainError, PadicTilingError, PrecisionError
from .fourier import (
    FTValue,
    check_local_constancy,
    check_nonvanishing,
    check_pair_vanishing,
    ft,
    ft_ball,
    ft_compact_open,
    ft_level_set,
    ft_point_measure,
    zero_set,
)
from .padic import (
    Ball,
    CompactOpenSet,
    Frequency,
    LevelSet,
    PAdicInt,
    PointSet,
    PrimeBase,
    canonicalize,
    fractional_part,
    measure,
    set_algebra,
    to_level_set,
    valuation,
)
from .tiling import (
    CensusRecord,
    TilingReport,
    census,
    enumerate_tiles,
    find_complements,
    gamma_t,
    regularize,
    theorem_shadow_check,
    verify_tiling,
    verify_tiling_spectral,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousCellError",
    "Ball",
    "CensusRecord",
    "CompactOpenSet",
    "CyclotomicSum",
    "DomainError",
    "FTValue",
    "Frequency",
    "LevelSet",
    "PAdicInt",
    "PadicTilingError",
    "PointSet",
    "PrecisionError",
    "PrimeBase",
    "TilingReport",
    "canonicalize",
    "census",
    "check_local_constancy",
    "check_nonvanishing",
    "check_pair_vanishing",
    "enumerate_tiles",
    "find_complements",
    "fractional_part",
    "ft",
    "ft_ball",
    "ft_compact_open",
    "ft_level_set",
    "ft_point_measure",
    "gamma_t",
    "measure",
    "regularize",
    "set_algebra",
    "theorem_shadow_check",
    "to_level_set",
    "valuation",
    "verify_tiling",
    "verify_tiling_spectral",
    "zero_set",
]
