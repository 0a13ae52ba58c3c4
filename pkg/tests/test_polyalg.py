"""Tests for polynomials, matrices and exact linear solving."""

from fractions import Fraction

import pytest

from spherikit.core.polyalg import (
    T_POLY,
    Inconsistent,
    Poly,
    PolyMatrix,
    RatMatrix,
    Underdetermined,
    Unique,
    adjugate_det,
    linear_combination,
    poly_divmod,
    poly_exact_div,
    solve_exact,
)
from spherikit.core.types import ExactDivisionByZero, NotDivisible, ShapeMismatch


def p(*coeffs: int | Fraction) -> Poly:
    return Poly(tuple(Fraction(c) for c in coeffs))


class TestPoly:
    """Dense polynomial behaviour."""

    def test_trailing_zeros_stripped(self) -> None:
        assert p(1, 2, 0, 0).coeffs == (1, 2)
        assert p(0, 0) == Poly()

    def test_degree(self) -> None:
        """The zero polynomial has degree -inf."""
        assert p(3).degree == 0
        assert T_POLY.degree == 1
        assert Poly().degree == float("-inf")

    def test_arithmetic(self) -> None:
        assert (p(1, 1) * p(1, -1)) == p(1, 0, -1)
        assert p(1, 2) + 3 == p(4, 2)
        assert 1 - p(1, 2) == p(0, -2)
        assert -p(1, -1) == p(-1, 1)

    def test_evaluate(self) -> None:
        assert p(1, -3)(1) == -2
        assert p(Fraction(-1, 2), Fraction(3, 2))(1) == 1

    @pytest.mark.parametrize(
        "poly,text",
        [
            (p(Fraction(-1, 2), Fraction(3, 2)), "(-1/2) + (3/2)t"),
            (p(1, -3), "1 + (-3)t"),
            (p(0, 0, 1), "t^2"),
            (p(-1, 2), "(-1) + 2t"),
            (Poly(), "0"),
        ],
    )
    def test_text(self, poly: Poly, text: str) -> None:
        assert str(poly) == text


class TestDivision:
    """Polynomial division."""

    def test_divmod(self) -> None:
        q, r = poly_divmod(p(-1, 0, 1), p(-1, 1))
        assert q == p(1, 1)
        assert r == Poly()

    def test_exact_div_remainder(self) -> None:
        """A nonzero remainder is reported with its data."""
        with pytest.raises(NotDivisible) as exc:
            poly_exact_div(p(1, 0, 1), p(-1, 1))
        assert exc.value.remainder == p(2)

    def test_divide_by_zero(self) -> None:
        with pytest.raises(ExactDivisionByZero):
            poly_divmod(p(1), Poly())
        with pytest.raises(ExactDivisionByZero):
            poly_exact_div(p(1, 1), Poly())


class TestMatrices:
    """Rational and polynomial matrices."""

    def test_identity_and_product(self) -> None:
        a = RatMatrix.from_rows([[1, 2], [3, 4]])
        assert a @ RatMatrix.identity(2) == a
        assert (a @ a).to_rows() == [[7, 10], [15, 22]]

    def test_row_sums(self) -> None:
        assert RatMatrix.from_rows([[1, Fraction(1, 2)], [0, 3]]).row_sums() == (
            Fraction(3, 2),
            3,
        )

    def test_shape_mismatch(self) -> None:
        with pytest.raises(ShapeMismatch):
            RatMatrix.from_rows([[1, 2]]) + RatMatrix.from_rows([[1], [2]])
        with pytest.raises(ShapeMismatch):
            RatMatrix.from_rows([[1, 2]]) @ RatMatrix.from_rows([[1, 2]])

    def test_ragged_rows(self) -> None:
        with pytest.raises(ShapeMismatch):
            RatMatrix.from_rows([[1, 2], [3]])

    def test_polymatrix_evaluate(self) -> None:
        m = PolyMatrix.from_rows([[1, 1], [1, p(-1, 2)]])
        assert m.evaluate(1) == RatMatrix.from_rows([[1, 1], [1, 1]])
        assert m.degree == 1

    def test_rational_times_polynomial(self) -> None:
        a = RatMatrix.from_rows([[2, 0], [0, 1]])
        m = PolyMatrix.from_rows([[T_POLY, 1], [1, T_POLY]])
        assert (a @ m) == PolyMatrix.from_rows([[p(0, 2), 2], [1, T_POLY]])

    def test_linear_combination(self) -> None:
        one = PolyMatrix.identity(1)
        t = PolyMatrix.from_rows([[T_POLY]])
        total = linear_combination(
            [(RatMatrix.from_rows([[3]]), one), (RatMatrix.from_rows([[-1]]), t)]
        )
        assert total[0, 0] == p(3, -1)


class TestSolve:
    """Gauss-Jordan solving to reduced row echelon form."""

    def test_unique(self) -> None:
        m = RatMatrix.from_rows([[2, 1], [1, 3]])
        assert solve_exact(m, [3, 5]) == Unique((Fraction(4, 5), Fraction(7, 5)))

    def test_overdetermined_consistent(self) -> None:
        """Extra consistent equations still give a unique solution."""
        m = RatMatrix.from_rows([[1, 0], [0, 1], [1, 1]])
        assert solve_exact(m, [1, 2, 3]) == Unique((Fraction(1), Fraction(2)))

    def test_inconsistent(self) -> None:
        """The witness row is the original index of the failing equation."""
        m = RatMatrix.from_rows([[1, 1], [1, 1]])
        assert solve_exact(m, [1, 2]) == Inconsistent(row=1, rank=1)

    def test_underdetermined(self) -> None:
        m = RatMatrix.from_rows([[1, 1], [2, 2]])
        assert solve_exact(m, [1, 2]) == Underdetermined(rank=1, free=1)

    def test_rhs_length(self) -> None:
        with pytest.raises(ShapeMismatch):
            solve_exact(RatMatrix.identity(2), [1])


class TestAdjugate:
    """Cofactor adjugate and determinant."""

    def test_two_by_two(self) -> None:
        a = PolyMatrix.from_rows([[1, 1], [1, p(-1, 2)]])
        adj, det = adjugate_det(a)
        assert det == p(-2, 2)
        assert adj == PolyMatrix.from_rows([[p(-1, 2), -1], [-1, 1]])

    def test_three_by_three(self) -> None:
        a = PolyMatrix.from_rows([[T_POLY, 1, 0], [0, T_POLY, 1], [1, 0, T_POLY]])
        adj, det = adjugate_det(a)
        assert det == p(1, 0, 0, 1)
        assert a @ adj == PolyMatrix.identity(3).scale(det)

    def test_one_by_one(self) -> None:
        adj, det = adjugate_det(PolyMatrix.from_rows([[p(2, 1)]]))
        assert adj == PolyMatrix.identity(1)
        assert det == p(2, 1)

    def test_non_square(self) -> None:
        with pytest.raises(ShapeMismatch):
            adjugate_det(PolyMatrix.from_rows([[1, 2]]))
