"""Tests for terminating hypergeometric series."""

from fractions import Fraction

import pytest

from spherikit.core.hyper import HypergeomSpec, build_terminating, shift_factor_consistency
from spherikit.core.polyalg import Poly
from spherikit.core.types import LowerParamPole, TerminatorError, ZeroShift


class TestBuildTerminating:
    """Series expansion into polynomials."""

    def test_two_f_one(self) -> None:
        """2F1(-1, 3; 1; t) = 1 - 3t."""
        assert str(build_terminating(HypergeomSpec.of([-1, 3], [1]))) == "1 + (-3)t"

    def test_degree_two(self) -> None:
        """2F1(-2, 4; 1; t) = 1 - 8t + 10t^2."""
        assert build_terminating(HypergeomSpec.of([-2, 4], [1])) == Poly(
            (Fraction(1), Fraction(-8), Fraction(10))
        )

    def test_unit_shift(self) -> None:
        """3F2(-1, 2, 2; 2, 1; t) = 1 - 2t."""
        spec = HypergeomSpec.of([-1, 2], [2], [1])
        assert build_terminating(spec) == Poly((Fraction(1), Fraction(-2)))

    def test_shift_matches_explicit_pair(self) -> None:
        """A shift s gives the same series as the explicit pair (s + 1; s)."""
        shifted = HypergeomSpec.of([-4, 7], [3], [Fraction(5, 2)])
        explicit = HypergeomSpec.of([-4, 7, Fraction(7, 2)], [3, Fraction(5, 2)])
        assert build_terminating(shifted) == build_terminating(explicit)

    def test_zero_terminator(self) -> None:
        """An upper parameter 0 gives the constant 1."""
        assert build_terminating(HypergeomSpec.of([0, 5], [2])) == Poly.constant(1)

    def test_degree(self) -> None:
        assert HypergeomSpec.of([-3, 1], [2]).degree == 3


class TestValidation:
    """Eager parameter checks."""

    def test_no_terminator(self) -> None:
        with pytest.raises(TerminatorError):
            HypergeomSpec.of([1, 2], [3])

    def test_two_terminators(self) -> None:
        with pytest.raises(TerminatorError):
            HypergeomSpec.of([-1, -2], [3])

    def test_lower_pole(self) -> None:
        """(c)_j vanishes at c = -1 inside a degree 3 series."""
        with pytest.raises(LowerParamPole) as exc:
            HypergeomSpec.of([-3, 1], [-1])
        assert exc.value.lower == -1
        assert exc.value.j == 2

    def test_lower_pole_beyond_degree(self) -> None:
        """A pole past the last term is harmless."""
        HypergeomSpec.of([-1, 1], [-1])

    def test_zero_shift(self) -> None:
        with pytest.raises(ZeroShift):
            HypergeomSpec.of([-1], [1], [0])


class TestShiftFactor:
    """(s+1)_j / (s)_j = (s+j)/s."""

    @pytest.mark.parametrize("s", [1, 5, Fraction(-7, 3), Fraction(1, 2), -10])
    def test_consistency(self, s: int | Fraction) -> None:
        assert shift_factor_consistency(s, 8)

    def test_zero(self) -> None:
        with pytest.raises(ZeroShift):
            shift_factor_consistency(0, 3)
