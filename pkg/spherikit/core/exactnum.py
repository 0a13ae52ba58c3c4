"""Exact rational scalars and combinatorial primitives."""

import math
from fractions import Fraction
from functools import reduce

from spherikit.core.types import BigRational, ExactDivisionByZero

ZERO = Fraction(0)
ONE = Fraction(1)

RationalLike = Fraction | int


def rational(value: RationalLike | str) -> BigRational:
    """Coerce an int, Fraction or canonical text to a BigRational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    return Fraction(value)


def exact_div(a: RationalLike, b: RationalLike) -> BigRational:
    """Divide exactly, raising ExactDivisionByZero instead of ZeroDivisionError."""
    if b == 0:
        raise ExactDivisionByZero(f"division of {a} by zero")
    return Fraction(a) / Fraction(b)


def pochhammer(a: RationalLike, j: int) -> BigRational:
    """
    Rising factorial (a)_j = a (a+1) ... (a+j-1).

    Args:
        a: Base
        j: Number of factors (j >= 0)

    Returns:
        Exact product; 1 for j = 0

    Examples:
        >>> pochhammer(2, 3)
        Fraction(24, 1)
        >>> pochhammer(-3, 5)
        Fraction(0, 1)
    """
    if j < 0:
        raise ValueError(f"pochhammer needs j >= 0, got {j}")
    base = Fraction(a)
    return reduce(lambda acc, m: acc * (base + m), range(j), ONE)


def factorial(j: int) -> BigRational:
    """j! as an exact rational."""
    if j < 0:
        raise ValueError(f"factorial needs j >= 0, got {j}")
    return Fraction(math.factorial(j))


def sign(x: RationalLike) -> int:
    """Exact sign: -1, 0 or 1."""
    return (x > 0) - (x < 0)


def is_nonpositive_integer(x: RationalLike) -> bool:
    """True for 0, -1, -2, ..."""
    x = Fraction(x)
    return x.denominator == 1 and x <= 0


def to_text(x: RationalLike) -> str:
    """Canonical text form: "p/q", with q omitted when q = 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
