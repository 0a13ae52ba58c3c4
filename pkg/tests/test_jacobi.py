"""Tests for the Jacobi polynomial identification of the scalar family."""

from fractions import Fraction

import pytest

from spherikit.analysis.expand import recurrence
from spherikit.core.polyalg import Poly
from spherikit.family.jacobi import (
    classical_nonnegativity,
    jacobi_in_t,
    jacobi_polynomial,
    jacobi_recurrence,
    jacobi_value_at_one,
)
from spherikit.family.spherical import SphericalFamily, SphericalType, build_phi


class TestJacobiPolynomial:
    """Classical recurrence."""

    def test_legendre(self) -> None:
        """P_2^(0,0)(x) = (3x^2 - 1)/2."""
        assert jacobi_polynomial(0, 0, 2) == Poly((Fraction(-1, 2), Fraction(0), Fraction(3, 2)))

    def test_degree_one(self) -> None:
        """P_1^(a,b)(x) = (a+1) + (a+b+2)(x-1)/2."""
        assert jacobi_polynomial(1, 2, 1) == Poly((Fraction(-1, 2), Fraction(5, 2)))

    @pytest.mark.parametrize("w", [0, 1, 4, 7])
    def test_value_at_one(self, w: int) -> None:
        assert jacobi_polynomial(1, 3, w)(1) == jacobi_value_at_one(1, w)


class TestIdentification:
    """The normalized l = 0 member is P_w^(1,n)(2t-1)/(w+1)."""

    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    @pytest.mark.parametrize("w", [0, 1, 2, 3, 8])
    def test_member_equals_jacobi(self, n: int, w: int) -> None:
        assert build_phi(n, 0, w)[0, 0] == jacobi_in_t(1, n, w)

    def test_value_at_one_is_w_plus_one(self) -> None:
        assert jacobi_value_at_one(1, 6) == 7

    @pytest.mark.parametrize("n", [0, 1, 3, 6])
    @pytest.mark.parametrize("w", [0, 1, 2, 5])
    def test_recurrence_matches(self, n: int, w: int) -> None:
        """The solved scalar recurrence equals the closed Jacobi triple."""
        triple = recurrence(SphericalFamily(SphericalType(n, 0), True), w)
        assert (triple.A[0, 0], triple.B[0, 0], triple.C[0, 0]) == jacobi_recurrence(1, n, w)


class TestNonnegativity:
    """Sufficient condition for nonnegative linearization coefficients."""

    def test_small_n(self) -> None:
        assert classical_nonnegativity(1, 0)
        assert classical_nonnegativity(1, 1)

    def test_large_n(self) -> None:
        """alpha = 1 < beta = n for n >= 2, matching the alternating regime."""
        assert not classical_nonnegativity(1, 2)
