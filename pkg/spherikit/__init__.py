"""
Spherikit - exact matrix-valued spherical functions on the complex projective plane.

Builds the families Phi(w, t) of type (n, l) for l in {0, 1} from terminating hypergeometric
series, and computes their three-term recurrences, product linearizations, sign patterns and
the associated matrix orthogonal polynomials, all in exact rational arithmetic.
"""

from spherikit.analysis.conjectures import check_alt_sign_l0, check_hook, check_n01_facts
from spherikit.analysis.expand import linearize, recurrence
from spherikit.analysis.mop import build_psi, build_psi_family
from spherikit.core.polyalg import Poly, PolyMatrix, RatMatrix
from spherikit.core.types import (
    CodecConfig,
    ParserMode,
    RangeRule,
    SpherikitError,
    SweepConfig,
)
from spherikit.family.spherical import (
    SphericalFamily,
    SphericalType,
    build_family,
    build_phi,
    load_family_file,
)

__version__ = "0.1.0"
__all__ = [
    # Families
    "SphericalType",
    "SphericalFamily",
    "build_phi",
    "build_family",
    "load_family_file",
    # Analysis
    "linearize",
    "recurrence",
    "check_alt_sign_l0",
    "check_n01_facts",
    "check_hook",
    "build_psi",
    "build_psi_family",
    # Algebra
    "Poly",
    "PolyMatrix",
    "RatMatrix",
    # Types & Config
    "CodecConfig",
    "ParserMode",
    "RangeRule",
    "SweepConfig",
    # Errors
    "SpherikitError",
]
