"""Exact polynomials in t, polynomial and rational matrices, exact linear algebra."""

import logging
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import TypeVar

from spherikit.core.exactnum import ONE, ZERO, RationalLike, exact_div, to_text
from spherikit.core.types import BigRational, ExactDivisionByZero, NotDivisible, ShapeMismatch

logger = logging.getLogger(__name__)

NEG_INF_DEGREE = float("-inf")

T = TypeVar("T")


@dataclass(frozen=True, slots=True)
class Poly:
    """Dense univariate polynomial in t, ascending coefficients, no trailing zeros."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: RationalLike) -> "Poly":
        return cls((Fraction(c),))

    @classmethod
    def monomial(cls, degree: int, c: RationalLike = 1) -> "Poly":
        return cls((ZERO,) * degree + (Fraction(c),))

    @property
    def degree(self) -> int | float:
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF_DEGREE

    @property
    def leading(self) -> BigRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coefficient(self, j: int) -> BigRational:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "Poly | RationalLike") -> "Poly":
        other = _promote(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coefficient(j) + other.coefficient(j) for j in range(size)))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly | RationalLike") -> "Poly":
        return self + (-_promote(other))

    def __rsub__(self, other: RationalLike) -> "Poly":
        return _promote(other) - self

    def __mul__(self, other: "Poly | RationalLike") -> "Poly":
        if isinstance(other, Poly):
            return poly_mul(self, other)
        c = Fraction(other)
        return Poly(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __call__(self, x: RationalLike) -> BigRational:
        return poly_eval(self, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms: list[str] = []
        for j, c in enumerate(self.coeffs):
            if c == 0:
                continue
            text = to_text(c)
            if c.denominator != 1 or c < 0:
                text = f"({text})"
            power = "" if j == 0 else ("t" if j == 1 else f"t^{j}")
            if j > 0 and c == 1:
                terms.append(power)
            else:
                terms.append(f"{text}{power}")
        return " + ".join(terms)


def _promote(value: "Poly | RationalLike") -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


T_POLY = Poly.monomial(1)


def poly_mul(p: Poly, q: Poly) -> Poly:
    """Exact product of two polynomials."""
    if not p or not q:
        return Poly()
    out = [ZERO] * (len(p.coeffs) + len(q.coeffs) - 1)
    for a_deg, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for b_deg, b in enumerate(q.coeffs):
            out[a_deg + b_deg] += a * b
    return Poly(tuple(out))


def poly_eval(p: Poly, x: RationalLike) -> BigRational:
    """Evaluate p(x) exactly by Horner's rule."""
    x = Fraction(x)
    acc = ZERO
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divmod(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder of p by a nonzero d."""
    if not d:
        raise ExactDivisionByZero("polynomial division by zero")
    rem = list(p.coeffs)
    dd = len(d.coeffs) - 1
    lead = d.leading
    if len(rem) - 1 < dd:
        return Poly(), p
    quot = [ZERO] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        f = exact_div(c, lead)
        quot[k - dd] = f
        for m, dc in enumerate(d.coeffs):
            rem[k - dd + m] -= f * dc
    return Poly(tuple(quot)), Poly(tuple(rem))


def poly_exact_div(p: Poly, d: Poly) -> Poly:
    """
    Divide p by d, requiring a zero remainder.

    Raises:
        NotDivisible: If the remainder is nonzero
    """
    quot, rem = poly_divmod(p, d)
    if rem:
        raise NotDivisible(p, d, rem)
    return quot


def _matmul(
    a: Sequence[T], a_shape: tuple[int, int], b: Sequence[T], b_shape: tuple[int, int], zero: T
) -> tuple[T, ...]:
    (ar, ac), (br, bc) = a_shape, b_shape
    if ac != br:
        raise ShapeMismatch(f"cannot multiply {ar}x{ac} by {br}x{bc}")
    out: list[T] = []
    for r in range(ar):
        for c in range(bc):
            acc = zero
            for k in range(ac):
                acc = acc + a[r * ac + k] * b[k * bc + c]  # type: ignore[operator]
            out.append(acc)
    return tuple(out)


@dataclass(frozen=True, slots=True)
class RatMatrix:
    """Dense matrix of exact rationals, row-major."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ShapeMismatch(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "RatMatrix":
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), width, tuple(Fraction(v) for r in rows for v in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "RatMatrix":
        entries = tuple(ONE if r == c else ZERO for r in range(size) for c in range(size))
        return cls(size, size, entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> BigRational:
        r, c = key
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Fraction, ...]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def row_sums(self) -> tuple[Fraction, ...]:
        return tuple(sum(self.row(r), ZERO) for r in range(self.rows))

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        _same_shape(self.shape, other.shape)
        entries = tuple(a + b for a, b in zip(self.entries, other.entries))
        return RatMatrix(self.rows, self.cols, entries)

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        _same_shape(self.shape, other.shape)
        entries = tuple(a - b for a, b in zip(self.entries, other.entries))
        return RatMatrix(self.rows, self.cols, entries)

    def __matmul__(self, other: "RatMatrix | PolyMatrix") -> "RatMatrix | PolyMatrix":
        if isinstance(other, PolyMatrix):
            return matpoly_mul(PolyMatrix.from_ratmatrix(self), other)
        entries = _matmul(self.entries, self.shape, other.entries, other.shape, ZERO)
        return RatMatrix(self.rows, other.cols, entries)

    def scale(self, c: RationalLike) -> "RatMatrix":
        return RatMatrix(self.rows, self.cols, tuple(Fraction(c) * e for e in self.entries))

    def with_entry(self, r: int, c: int, value: RationalLike) -> "RatMatrix":
        entries = list(self.entries)
        entries[r * self.cols + c] = Fraction(value)
        return RatMatrix(self.rows, self.cols, tuple(entries))


@dataclass(frozen=True, slots=True)
class PolyMatrix:
    """Dense matrix of polynomials in t, row-major."""

    rows: int
    cols: int
    entries: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise ShapeMismatch(f"matrix dimensions must be positive, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatch(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly | RationalLike]]) -> "PolyMatrix":
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise ShapeMismatch("ragged rows")
        return cls(len(rows), width, tuple(_promote(v) for r in rows for v in r))

    @classmethod
    def from_ratmatrix(cls, m: RatMatrix) -> "PolyMatrix":
        return cls(m.rows, m.cols, tuple(Poly.constant(e) for e in m.entries))

    @classmethod
    def identity(cls, size: int) -> "PolyMatrix":
        return cls.from_ratmatrix(RatMatrix.identity(size))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "PolyMatrix":
        return cls(rows, cols, (Poly(),) * (rows * cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> Poly:
        r, c = key
        return self.entries[r * self.cols + c]

    def row(self, r: int) -> tuple[Poly, ...]:
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def to_rows(self) -> list[list[Poly]]:
        return [list(self.row(r)) for r in range(self.rows)]

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def map(self, fn: Callable[[Poly], Poly]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, tuple(fn(e) for e in self.entries))

    def degrees(self) -> tuple[tuple[int | float, ...], ...]:
        return tuple(tuple(e.degree for e in self.row(r)) for r in range(self.rows))

    @property
    def degree(self) -> int | float:
        """Largest entry degree."""
        return max(e.degree for e in self.entries)

    def evaluate(self, x: RationalLike) -> RatMatrix:
        return RatMatrix(self.rows, self.cols, tuple(poly_eval(e, x) for e in self.entries))

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        _same_shape(self.shape, other.shape)
        entries = tuple(a + b for a, b in zip(self.entries, other.entries))
        return PolyMatrix(self.rows, self.cols, entries)

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        _same_shape(self.shape, other.shape)
        entries = tuple(a - b for a, b in zip(self.entries, other.entries))
        return PolyMatrix(self.rows, self.cols, entries)

    def __matmul__(self, other: "PolyMatrix | RatMatrix") -> "PolyMatrix":
        if isinstance(other, RatMatrix):
            other = PolyMatrix.from_ratmatrix(other)
        return matpoly_mul(self, other)

    def scale(self, factor: Poly | RationalLike) -> "PolyMatrix":
        return self.map(lambda e: e * factor)

    def exact_div(self, d: Poly) -> "PolyMatrix":
        return self.map(lambda e: poly_exact_div(e, d))


def _same_shape(a: tuple[int, int], b: tuple[int, int]) -> None:
    if a != b:
        raise ShapeMismatch(f"shape {a[0]}x{a[1]} does not match {b[0]}x{b[1]}")


def matpoly_mul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    """Exact product of polynomial matrices."""
    entries = _matmul(a.entries, a.shape, b.entries, b.shape, Poly())
    return PolyMatrix(a.rows, b.cols, entries)


def linear_combination(terms: Iterable[tuple[RatMatrix, PolyMatrix]]) -> PolyMatrix:
    """Sum of constant-matrix times polynomial-matrix products."""
    total: PolyMatrix | None = None
    for coeff, member in terms:
        part = coeff @ member
        assert isinstance(part, PolyMatrix)
        total = part if total is None else total + part
    if total is None:
        raise ShapeMismatch("empty linear combination")
    return total


# Exact linear solving


@dataclass(frozen=True)
class Unique:
    """The system has exactly one solution."""

    x: tuple[Fraction, ...]


@dataclass(frozen=True)
class Inconsistent:
    """No solution; `row` is the original equation left as 0 = nonzero."""

    row: int
    rank: int


@dataclass(frozen=True)
class Underdetermined:
    """Consistent with `free` free unknowns."""

    rank: int
    free: int


SolveReport = Unique | Inconsistent | Underdetermined


def solve_exact(m: RatMatrix, b: Sequence[RationalLike]) -> SolveReport:
    """
    Solve M x = b exactly by Gauss-Jordan elimination to reduced row echelon form.

    The reduced echelon form is unique, so the outcome does not depend on pivot order.

    Args:
        m: Coefficient matrix
        b: Right-hand side, one entry per row of m

    Returns:
        Unique, Inconsistent or Underdetermined

    Examples:
        >>> solve_exact(RatMatrix.from_rows([[1, 1], [2, 2]]), [1, 2])
        Underdetermined(rank=1, free=1)
    """
    if m.rows != len(b):
        raise ShapeMismatch(f"{m.rows} equations but {len(b)} right-hand sides")

    aug = [list(m.row(r)) + [Fraction(b[r])] for r in range(m.rows)]
    origin = list(range(m.rows))
    pivots: list[int] = []
    rank = 0

    for c in range(m.cols):
        if rank == m.rows:
            break
        p = next((k for k in range(rank, m.rows) if aug[k][c] != 0), None)
        if p is None:
            continue
        aug[rank], aug[p] = aug[p], aug[rank]
        origin[rank], origin[p] = origin[p], origin[rank]
        piv = aug[rank][c]
        aug[rank] = [v / piv for v in aug[rank]]
        for k in range(m.rows):
            factor = aug[k][c]
            if k != rank and factor != 0:
                aug[k] = [v - factor * w for v, w in zip(aug[k], aug[rank])]
        pivots.append(c)
        rank += 1

    logger.debug("solve_exact: %dx%d system, rank %d", m.rows, m.cols, rank)

    for k in range(rank, m.rows):
        if aug[k][-1] != 0:
            return Inconsistent(row=origin[k], rank=rank)
    if rank < m.cols:
        return Underdetermined(rank=rank, free=m.cols - rank)

    x = [ZERO] * m.cols
    for idx, c in enumerate(pivots):
        x[c] = aug[idx][-1]
    return Unique(tuple(x))


def _det(rows: list[list[Poly]]) -> Poly:
    size = len(rows)
    if size == 1:
        return rows[0][0]
    if size == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly()
    for c in range(size):
        if not rows[0][c]:
            continue
        minor = [r[:c] + r[c + 1 :] for r in rows[1:]]
        term = rows[0][c] * _det(minor)
        total = total + term if c % 2 == 0 else total - term
    return total


def adjugate_det(a: PolyMatrix) -> tuple[PolyMatrix, Poly]:
    """
    Adjugate and determinant of a small square polynomial matrix by cofactors.

    Returns:
        (adj, det) with a @ adj == det * I exactly
    """
    if a.rows != a.cols:
        raise ShapeMismatch(f"adjugate needs a square matrix, got {a.rows}x{a.cols}")
    size = a.rows
    rows = a.to_rows()
    if size == 1:
        return PolyMatrix.identity(1), rows[0][0]

    cofactor = [[Poly()] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = [row[:c] + row[c + 1 :] for k, row in enumerate(rows) if k != r]
            value = _det(minor)
            cofactor[r][c] = value if (r + c) % 2 == 0 else -value
    adj = PolyMatrix.from_rows([[cofactor[c][r] for c in range(size)] for r in range(size)])
    return adj, _det(rows)
