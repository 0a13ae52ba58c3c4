"""Exact arithmetic, polynomial algebra, hypergeometric series and serialization."""

from spherikit.core.exactnum import pochhammer, rational
from spherikit.core.hyper import HypergeomSpec, build_terminating
from spherikit.core.polyalg import Poly, PolyMatrix, RatMatrix, adjugate_det, solve_exact
from spherikit.core.types import BigRational, CodecConfig, ParserMode, RangeRule

__all__ = [
    "BigRational",
    "rational",
    "pochhammer",
    "Poly",
    "PolyMatrix",
    "RatMatrix",
    "solve_exact",
    "adjugate_det",
    "HypergeomSpec",
    "build_terminating",
    "CodecConfig",
    "ParserMode",
    "RangeRule",
]
