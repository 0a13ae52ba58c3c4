"""Expansion of polynomial matrices in a spherical family: linearization and recurrences."""

import logging
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType

from spherikit.core.exactnum import ZERO
from spherikit.core.polyalg import (
    T_POLY,
    Inconsistent,
    PolyMatrix,
    RatMatrix,
    Underdetermined,
    Unique,
    linear_combination,
    solve_exact,
)
from spherikit.core.types import (
    BasisDependent,
    BasisInsufficient,
    FamilyError,
    RangeRule,
    RecurrenceDegenerate,
    ShapeMismatch,
)
from spherikit.family.spherical import SphericalFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearizationExpansion:
    """Phi(i, t) Phi(j, t) = sum_k coeffs[k] Phi(k, t) over kmin..kmax."""

    l: int
    n: int
    i: int
    j: int
    kmin: int
    kmax: int
    coeffs: Mapping[int, RatMatrix]
    residual_zero: bool
    rule: RangeRule = RangeRule.MAX

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", MappingProxyType(dict(sorted(self.coeffs.items()))))

    @property
    def indices(self) -> range:
        return range(self.kmin, self.kmax + 1)

    @property
    def traditional_range(self) -> range:
        """k from j - i to j + i."""
        return range(self.j - self.i, self.j + self.i + 1)

    def scalar(self, k: int) -> Fraction:
        """The 1x1 coefficient at k (l = 0 families)."""
        m = self.coeffs[k]
        if m.shape != (1, 1):
            raise ShapeMismatch(f"coefficient A_{k} is {m.rows}x{m.cols}, not scalar")
        return m[0, 0]

    def total(self) -> RatMatrix:
        """Sum of all coefficient matrices; every row sums to l + 1."""
        mats = list(self.coeffs.values())
        out = mats[0]
        for m in mats[1:]:
            out = out + m
        return out


@dataclass(frozen=True)
class RecurrenceTriple:
    """A_w Phi(w-1) + B_w Phi(w) + C_w Phi(w+1) = t Phi(w)."""

    w: int
    A: RatMatrix
    B: RatMatrix
    C: RatMatrix

    def row_sums(self) -> tuple[Fraction, ...]:
        return (self.A + self.B + self.C).row_sums()


@dataclass(frozen=True)
class SparsityReport:
    """Diagonal structure of a recurrence triple."""

    size: int
    vacuous: bool
    offsets: dict[str, tuple[int, ...]] = field(default_factory=dict)
    a_two_diagonals: bool = True
    c_two_diagonals: bool = True
    b_tridiagonal: bool = True

    @property
    def conforms(self) -> bool:
        shaped = self.a_two_diagonals and self.c_two_diagonals and self.b_tridiagonal
        return self.vacuous or shaped


def expand_in_basis(
    target: PolyMatrix, family: SphericalFamily, indices: Iterable[int]
) -> dict[int, RatMatrix]:
    """
    Find constant matrices A_k with sum_k A_k Phi(k, t) = target.

    Each target row is solved on its own: row r of A_k multiplies the rows of Phi(k, t),
    and every power of t in every column gives one equation. Overdetermined consistent
    systems are accepted.

    Raises:
        BasisInsufficient: The index set cannot represent some target row
        BasisDependent: The representation is not unique
    """
    if not family.normalized:
        raise FamilyError("expansion requires a normalized family")
    size = family.size
    if target.cols != size:
        raise ShapeMismatch(f"target has {target.cols} columns, family members have {size}")

    ks = sorted(set(indices))
    members = [family[k] for k in ks]
    degree = max([target.degree, *(m.degree for m in members), 0])
    powers = int(degree) + 1
    unknowns = len(ks) * size

    system = RatMatrix(
        size * powers,
        unknowns,
        tuple(
            members[u // size][u % size, col].coefficient(p)
            for col in range(size)
            for p in range(powers)
            for u in range(unknowns)
        ),
    )
    logger.debug("expand_in_basis: %d equations, %d unknowns over k=%s", system.rows, unknowns, ks)

    rows: list[tuple[Fraction, ...]] = []
    for r in range(target.rows):
        rhs = [target[r, col].coefficient(p) for col in range(size) for p in range(powers)]
        match solve_exact(system, rhs):
            case Unique(x):
                rows.append(x)
            case Inconsistent(rank=rank):
                raise BasisInsufficient(
                    "target is not in the span of the basis", r + 1, rank, unknowns
                )
            case Underdetermined(rank=rank):
                raise BasisDependent("expansion is not unique", r + 1, rank, unknowns)

    return {
        k: RatMatrix(
            target.rows,
            size,
            tuple(rows[r][idx * size + m] for r in range(target.rows) for m in range(size)),
        )
        for idx, k in enumerate(ks)
    }


def linearization_range(l: int, i: int, j: int, rule: RangeRule = RangeRule.MAX) -> range:
    """
    Index range of the product expansion.

    RangeRule.MAX starts at max{j-i-l, 0}; RangeRule.MIN takes the literal min{j-i-l, 0},
    clamped at 0, which yields a superset.
    """
    if i > j:
        raise ValueError(f"expected i <= j, got i={i}, j={j}")
    low = max(j - i - l, 0) if rule is RangeRule.MAX else max(min(j - i - l, 0), 0)
    return range(low, i + j + l + 1)


def linearize(
    family: SphericalFamily, i: int, j: int, rule: RangeRule = RangeRule.MAX
) -> LinearizationExpansion:
    """
    Linearize Phi(i, t) Phi(j, t) with a residual-zero certificate.

    Examples:
        >>> from spherikit.family.spherical import build_family
        >>> exp = linearize(build_family(0, 0, 2), 1, 1)
        >>> [str(exp.scalar(k)) for k in exp.indices]
        ['1/8', '1/5', '27/40']
    """
    ks = linearization_range(family.l, i, j, rule)
    family = family.require([i, j, *ks])
    target = family[i] @ family[j]
    coeffs = expand_in_basis(target, family, ks)
    residual = linear_combination((coeffs[k], family[k]) for k in ks) - target
    return LinearizationExpansion(
        l=family.l,
        n=family.n,
        i=i,
        j=j,
        kmin=ks.start,
        kmax=ks.stop - 1,
        coeffs=coeffs,
        residual_zero=residual.is_zero(),
        rule=rule,
    )


def superset_uniqueness(
    expansion: LinearizationExpansion, family: SphericalFamily, extra: Iterable[int]
) -> bool:
    """Re-solve over a larger index set; extra indices must come back as zero matrices."""
    extra = [k for k in extra if k not in expansion.coeffs]
    ks = [*expansion.indices, *extra]
    family = family.require([expansion.i, expansion.j, *ks])
    target = family[expansion.i] @ family[expansion.j]
    coeffs = expand_in_basis(target, family, ks)
    return all(coeffs[k].is_zero() for k in extra) and all(
        coeffs[k] == expansion.coeffs[k] for k in expansion.indices
    )


def recurrence(family: SphericalFamily, w: int) -> RecurrenceTriple:
    """
    Three-term recurrence A_w Phi(w-1) + B_w Phi(w) + C_w Phi(w+1) = t Phi(w).

    At w = 0 the solve runs over {0, 1} and A_0 is the zero matrix.

    Raises:
        RecurrenceDegenerate: If the triple is not unique
    """
    ks = [w - 1, w, w + 1] if w >= 1 else [0, 1]
    family = family.require(ks)
    target = family[w].scale(T_POLY)
    try:
        coeffs = expand_in_basis(target, family, ks)
    except BasisDependent as e:
        raise RecurrenceDegenerate("recurrence is not unique", e.row, e.rank, e.unknowns) from e

    size = family.size
    a = coeffs[w - 1] if w >= 1 else RatMatrix.zeros(size, size)
    return RecurrenceTriple(w=w, A=a, B=coeffs[w], C=coeffs[w + 1])


def verify_recurrence(family: SphericalFamily, triple: RecurrenceTriple) -> bool:
    """Check the defining identity bit-exactly."""
    w = triple.w
    family = family.require([w, w + 1, *([w - 1] if w >= 1 else [])])
    terms = [(triple.B, family[w]), (triple.C, family[w + 1])]
    if w >= 1:
        terms.append((triple.A, family[w - 1]))
    return (linear_combination(terms) - family[w].scale(T_POLY)).is_zero()


def _offsets(m: RatMatrix) -> tuple[int, ...]:
    return tuple(sorted({c - r for r in range(m.rows) for c in range(m.cols) if m[r, c] != ZERO}))


def _within_two_diagonals(offsets: tuple[int, ...]) -> bool:
    return not offsets or offsets[-1] - offsets[0] <= 1


def sparsity_report(triple: RecurrenceTriple, l: int) -> SparsityReport:
    """
    Compare a triple with the claimed shape: A_w and C_w on two diagonals, B_w tridiagonal.

    Every matrix of size <= 2 is tridiagonal, so the report is flagged vacuous there.
    """
    size = l + 1
    offsets = {"A": _offsets(triple.A), "B": _offsets(triple.B), "C": _offsets(triple.C)}
    return SparsityReport(
        size=size,
        vacuous=size <= 2,
        offsets=offsets,
        a_two_diagonals=_within_two_diagonals(offsets["A"]),
        c_two_diagonals=_within_two_diagonals(offsets["C"]),
        b_tridiagonal=all(abs(d) <= 1 for d in offsets["B"]),
    )
