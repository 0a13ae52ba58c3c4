"""Exact Jacobi polynomials; the l = 0 family is P_w^(1,n)(2t-1) up to normalization."""

from fractions import Fraction

from spherikit.core.exactnum import ONE, ZERO, RationalLike, factorial, pochhammer
from spherikit.core.polyalg import Poly
from spherikit.core.types import ExactDivisionByZero

X_POLY = Poly.monomial(1)
TWO_T_MINUS_ONE = Poly((Fraction(-1), Fraction(2)))


def jacobi_polynomial(
    alpha: RationalLike, beta: RationalLike, w: int, variable: Poly = X_POLY
) -> Poly:
    """
    P_w^(alpha, beta) evaluated at a polynomial argument, by the three-term recurrence

        2(k+1)(k+a+b+1)(2k+a+b) P_{k+1}
            = (2k+a+b+1)[(2k+a+b+2)(2k+a+b) x + a^2 - b^2] P_k
              - 2(k+a)(k+b)(2k+a+b+2) P_{k-1}
    """
    a, b = Fraction(alpha), Fraction(beta)
    prev = Poly.constant(1)
    if w == 0:
        return prev
    x = variable
    cur = (a + 1) + (x - 1) * ((a + b + 2) / 2)
    for k in range(1, w):
        s = 2 * k + a + b
        lead = 2 * (k + 1) * (k + a + b + 1) * s
        if lead == 0:
            raise ExactDivisionByZero(f"degenerate Jacobi recurrence at k={k}")
        nxt = (x * ((s + 2) * s) + (a * a - b * b)) * cur * (s + 1)
        nxt = nxt - prev * (2 * (k + a) * (k + b) * (s + 2))
        prev, cur = cur, nxt * (ONE / lead)
    return cur


def jacobi_value_at_one(alpha: RationalLike, w: int) -> Fraction:
    """P_w^(alpha, beta)(1) = (alpha+1)_w / w!."""
    return pochhammer(Fraction(alpha) + 1, w) / factorial(w)


def jacobi_in_t(alpha: RationalLike, beta: RationalLike, w: int, normalized: bool = True) -> Poly:
    """P_w^(alpha, beta)(2t - 1), optionally divided by its value at t = 1."""
    p = jacobi_polynomial(alpha, beta, w, TWO_T_MINUS_ONE)
    if normalized:
        p = p * (ONE / jacobi_value_at_one(alpha, w))
    return p


def jacobi_recurrence(
    alpha: RationalLike, beta: RationalLike, w: int
) -> tuple[Fraction, Fraction, Fraction]:
    """
    Scalar triple (A_w, B_w, C_w) with

        A_w p_{w-1}(t) + B_w p_w(t) + C_w p_{w+1}(t) = t p_w(t)

    for p_w(t) = P_w^(alpha, beta)(2t - 1) / P_w^(alpha, beta)(1).
    """
    a, b = Fraction(alpha), Fraction(beta)
    s = 2 * w + a + b
    a_w = 2 * (w + 1) * (w + a + b + 1) / ((s + 1) * (s + 2))
    b_w = (b * b - a * a) / (s * (s + 2))
    up = a_w * (a + w + 1) / (w + 1)
    if w == 0:
        return ZERO, (b_w + 1) / 2, up / 2
    c_w = 2 * (w + a) * (w + b) / (s * (s + 1))
    down = c_w * w / (a + w)
    return down / 2, (b_w + 1) / 2, up / 2


def classical_nonnegativity(alpha: RationalLike, beta: RationalLike) -> bool:
    """Sufficient condition for nonnegative linearization: alpha >= beta and alpha + beta >= 1."""
    a, b = Fraction(alpha), Fraction(beta)
    return a >= b and a + b >= 1
