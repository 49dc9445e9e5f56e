"""Cheeger sets and prescribed-curvature minimizers of simple polygons.

The exact pipeline runs polygon -> medial axis -> inward-parallel
structure -> minimizers; `raster` holds the independent grid oracle,
`cli` the command-line front end.
"""

from .cheeger import (CheegerResult, ProfileRow, ProfileTable, g_of_kappa,
                      isoperimetric_profile, legendre_check, solve_cheeger)
from .errors import (CharacterizationError, CheegerKitError, DomainError,
                     InputError, ReachViolationError, StructuralError,
                     SubcriticalError, VolumeRangeError)
from .medial import MedialGraph, build_medial
from .minimizers import (CurvatureProblem, MinimizerSet, interpolant,
                         maximal_minimizer, minimal_minimizer,
                         solve_for_volume, verify_minimizer_invariants)
from .parallel import ParallelStructure, disconnection_bands, erode, \
    gamma2_empty_check, has_no_neck, inner_area
from .polygon import JordanPolygon
from .raster import (RasterMask, component_count, oracle_cheeger,
                     oracle_erode, oracle_no_neck, oracle_open,
                     oracle_perimeter, rasterize)

__all__ = [
    "CharacterizationError", "CheegerKitError", "CheegerResult",
    "CurvatureProblem", "DomainError", "InputError", "JordanPolygon",
    "MedialGraph", "MinimizerSet", "ParallelStructure", "ProfileRow",
    "ProfileTable", "RasterMask", "ReachViolationError", "StructuralError",
    "SubcriticalError", "VolumeRangeError", "build_medial",
    "component_count", "disconnection_bands", "erode", "g_of_kappa",
    "gamma2_empty_check", "has_no_neck", "inner_area", "interpolant",
    "isoperimetric_profile", "legendre_check", "maximal_minimizer",
    "minimal_minimizer", "oracle_cheeger", "oracle_erode", "oracle_no_neck",
    "oracle_open", "oracle_perimeter", "rasterize", "solve_cheeger",
    "solve_for_volume", "verify_minimizer_invariants",
]

__version__ = "0.1.0"
