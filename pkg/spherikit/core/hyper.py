"""Terminating generalized hypergeometric series with unit-shift parameter pairs."""

from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from spherikit.core.exactnum import ONE, RationalLike, is_nonpositive_integer, pochhammer
from spherikit.core.polyalg import Poly
from spherikit.core.types import LowerParamPole, TerminatorError, ZeroShift


@dataclass(frozen=True)
class HypergeomSpec:
    """
    Parameters of a terminating series

        sum_j prod_u (u)_j / (j! prod_c (c)_j) * prod_s (s + j)/s * t^j

    A shift s stands for the matched pair (s + 1; s) of upper and lower parameters.
    Validation happens eagerly on construction.

    Attributes:
        upper: Ordinary upper parameters, exactly one a nonpositive integer
        lower: Ordinary lower parameters
        shifts: Unit-shift values s (each nonzero)
    """

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...] = ()
    shifts: tuple[Fraction, ...] = ()
    degree: int = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "upper", tuple(Fraction(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(Fraction(c) for c in self.lower))
        object.__setattr__(self, "shifts", tuple(Fraction(s) for s in self.shifts))

        terminators = [u for u in self.upper if is_nonpositive_integer(u)]
        if len(terminators) != 1:
            raise TerminatorError(
                f"expected exactly one nonpositive integer upper parameter, got {terminators}"
            )
        degree = -int(terminators[0])
        object.__setattr__(self, "degree", degree)

        for s in self.shifts:
            if s == 0:
                raise ZeroShift("unit-shift parameter s must be nonzero")
        for c in self.lower:
            for j in range(degree):
                if c + j == 0:
                    raise LowerParamPole(c, j + 1)

    @classmethod
    def of(
        cls,
        upper: Sequence[RationalLike],
        lower: Sequence[RationalLike] = (),
        shifts: Sequence[RationalLike] = (),
    ) -> "HypergeomSpec":
        return cls(
            tuple(Fraction(u) for u in upper),
            tuple(Fraction(c) for c in lower),
            tuple(Fraction(s) for s in shifts),
        )


def build_terminating(spec: HypergeomSpec) -> Poly:
    """
    Expand a terminating series into an exact polynomial in t.

    The ordinary part is accumulated by its term ratio; each shift contributes the
    non-cumulative factor (s + j)/s to the j-th coefficient.

    Examples:
        >>> str(build_terminating(HypergeomSpec.of([-1, 3], [1])))
        '1 + (-3)t'
    """
    coeffs: list[Fraction] = []
    base = ONE
    for j in range(spec.degree + 1):
        if j > 0:
            num = ONE
            for u in spec.upper:
                num *= u + j - 1
            den = Fraction(j)
            for c in spec.lower:
                den *= c + j - 1
            base = base * num / den
        shift = ONE
        for s in spec.shifts:
            shift *= (s + j) / s
        coeffs.append(base * shift)
    return Poly(tuple(coeffs))


def shift_factor_consistency(s: RationalLike, degree: int) -> bool:
    """
    Check (s+1)_j / (s)_j == (s+j)/s for 0 <= j <= degree wherever (s)_j != 0.

    Examples:
        >>> shift_factor_consistency(5, 4)
        True
    """
    s = Fraction(s)
    if s == 0:
        raise ZeroShift("unit-shift parameter s must be nonzero")
    for j in range(degree + 1):
        den = pochhammer(s, j)
        if den == 0:
            continue
        if pochhammer(s + 1, j) / den != (s + j) / s:
            return False
    return True
