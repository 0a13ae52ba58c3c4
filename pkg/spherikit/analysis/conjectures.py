"""Sign patterns of linearization coefficients: alternating signs and the hook property."""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Literal

from spherikit.analysis.expand import LinearizationExpansion, linearize
from spherikit.core.exactnum import sign
from spherikit.core.polyalg import RatMatrix
from spherikit.core.types import FamilyError
from spherikit.family.jacobi import classical_nonnegativity
from spherikit.family.spherical import SphericalFamily

WitnessKind = Literal["zero", "sign"]


class Sign(str, Enum):
    """Exact sign of a rational entry."""

    POSITIVE = "+"
    NEGATIVE = "-"
    ZERO = "0"

    @classmethod
    def of(cls, x: Fraction | int) -> "Sign":
        return {1: cls.POSITIVE, -1: cls.NEGATIVE, 0: cls.ZERO}[sign(x)]

    @classmethod
    def alternating(cls, m: int) -> "Sign":
        """(-1)^m as a sign."""
        return cls.POSITIVE if m % 2 == 0 else cls.NEGATIVE


@dataclass(frozen=True)
class SignGrid:
    """Entrywise signs of a matrix."""

    rows: int
    cols: int
    entries: tuple[Sign, ...]

    def __getitem__(self, key: tuple[int, int]) -> Sign:
        r, c = key
        return self.entries[r * self.cols + c]

    def to_rows(self) -> list[list[str]]:
        return [[self[r, c].value for c in range(self.cols)] for r in range(self.rows)]

    def __str__(self) -> str:
        return "\n".join(" ".join(row) for row in self.to_rows())


@dataclass(frozen=True)
class Witness:
    """A cell that breaks the expected pattern (1-based row and column)."""

    k: int
    row: int
    col: int
    actual: Sign
    expected: Sign
    kind: WitnessKind


@dataclass(frozen=True)
class KVerdict:
    """Sign grid of one coefficient matrix A_k, compared when k is in the traditional range."""

    k: int
    grid: SignGrid
    expected: SignGrid | None
    witnesses: tuple[Witness, ...]

    @property
    def in_range(self) -> bool:
        return self.expected is not None

    @property
    def holds(self) -> bool | None:
        return None if self.expected is None else not self.witnesses


@dataclass(frozen=True)
class HookReport:
    """Hook alternating check of one expansion."""

    i: int
    j: int
    l: int
    n: int
    verdicts: tuple[KVerdict, ...]
    coeffs: dict[int, RatMatrix]
    outside_hypothesis: bool = False

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts if v.in_range)

    @property
    def witnesses(self) -> tuple[Witness, ...]:
        return tuple(w for v in self.verdicts for w in v.witnesses)


@dataclass(frozen=True)
class SignVerdict:
    """Scalar (l = 0) sign check of one expansion."""

    check: str
    n: int
    i: int
    j: int
    coefficients: dict[int, Fraction]
    witnesses: tuple[Witness, ...]
    outside_hypothesis: bool = False
    note: str = ""

    @property
    def holds(self) -> bool:
        return not self.witnesses


def sign_grid(a: RatMatrix) -> SignGrid:
    """Entrywise exact sign."""
    return SignGrid(a.rows, a.cols, tuple(Sign.of(e) for e in a.entries))


def hook_pattern(size: int, parity: int) -> SignGrid:
    """
    Expected grid: hook h (row h from the diagonal rightward, column h from the diagonal
    downward) has sign (-1)^(h-1+parity), i.e. entry (r, c) is (-1)^(min(r,c)-1+parity).

    Examples:
        >>> str(hook_pattern(3, 0))
        '+ + +\\n+ - -\\n+ - +'
    """
    if size <= 0:
        raise ValueError(f"size must be positive, got {size}")
    return SignGrid(
        size,
        size,
        tuple(
            Sign.alternating(min(r, c) - 1 + parity)
            for r in range(1, size + 1)
            for c in range(1, size + 1)
        ),
    )


def _compare(k: int, actual: SignGrid, expected: SignGrid) -> tuple[Witness, ...]:
    out: list[Witness] = []
    for r in range(actual.rows):
        for c in range(actual.cols):
            got, want = actual[r, c], expected[r, c]
            if got is want:
                continue
            kind: WitnessKind = "zero" if got is Sign.ZERO else "sign"
            out.append(Witness(k, r + 1, c + 1, got, want, kind))
    return tuple(out)


def _require_l0(family: SphericalFamily) -> None:
    if family.l != 0:
        raise FamilyError(f"scalar sign checks need an l = 0 family, got l = {family.l}")


def alt_sign_verdict(expansion: LinearizationExpansion) -> SignVerdict:
    """Signs alternate starting positive at k = |j - i|, with no zeros."""
    i, j = expansion.i, expansion.j
    start = abs(j - i)
    witnesses = []
    for m in range(2 * min(i, j) + 1):
        k = start + m
        value = expansion.scalar(k)
        got, want = Sign.of(value), Sign.alternating(m)
        if got is not want:
            kind: WitnessKind = "zero" if got is Sign.ZERO else "sign"
            witnesses.append(Witness(k, 1, 1, got, want, kind))
    return SignVerdict(
        check="alt-sign",
        n=expansion.n,
        i=i,
        j=j,
        coefficients={k: expansion.scalar(k) for k in expansion.indices},
        witnesses=tuple(witnesses),
        outside_hypothesis=expansion.n <= 1,
    )


def check_alt_sign_l0(family: SphericalFamily, i: int, j: int) -> SignVerdict:
    """
    Alternating-sign check for the product of two l = 0 members.

    Zero coefficients count as violations and are reported as "zero" witnesses.
    """
    _require_l0(family)
    return alt_sign_verdict(linearize(family, i, j))


def check_n01_facts(family: SphericalFamily, i: int, j: int) -> SignVerdict:
    """
    n = 0: every coefficient strictly positive.
    n = 1: coefficients at even offsets from |i - j| strictly positive, odd offsets zero.
    """
    _require_l0(family)
    n = family.n
    if n not in (0, 1):
        raise ValueError(f"the n = 0 / n = 1 facts need n in {{0, 1}}, got n = {n}")
    expansion = linearize(family, i, j)
    start = abs(j - i)
    witnesses = []
    for m in range(2 * min(i, j) + 1):
        k = start + m
        got = Sign.of(expansion.scalar(k))
        want = Sign.ZERO if (n == 1 and m % 2 == 1) else Sign.POSITIVE
        if got is not want:
            kind: WitnessKind = "zero" if got is Sign.ZERO else "sign"
            witnesses.append(Witness(k, 1, 1, got, want, kind))
    criterion = "met" if classical_nonnegativity(1, n) else "not met"
    return SignVerdict(
        check="n01",
        n=n,
        i=i,
        j=j,
        coefficients={k: expansion.scalar(k) for k in expansion.indices},
        witnesses=tuple(witnesses),
        note=f"Jacobi (1, {n}) classical nonnegativity criterion: {criterion}",
    )


def hook_report(expansion: LinearizationExpansion) -> HookReport:
    """Build the hook report for an expansion; k outside j-i..j+i is reported but not judged."""
    size = expansion.l + 1
    traditional = expansion.traditional_range
    verdicts = []
    for k, a in expansion.coeffs.items():
        grid = sign_grid(a)
        if k in traditional:
            expected = hook_pattern(size, (k - traditional.start) % 2)
            verdicts.append(KVerdict(k, grid, expected, _compare(k, grid, expected)))
        else:
            verdicts.append(KVerdict(k, grid, None, ()))
    return HookReport(
        i=expansion.i,
        j=expansion.j,
        l=expansion.l,
        n=expansion.n,
        verdicts=tuple(verdicts),
        coeffs=dict(expansion.coeffs),
        outside_hypothesis=expansion.n <= 1,
    )


def check_hook(family: SphericalFamily, i: int, j: int) -> HookReport:
    """
    Hook alternating check for Phi(i, t) Phi(j, t), i < j.

    Works for any family size, including externally loaded l >= 2 families.
    """
    if i >= j:
        raise ValueError(f"the hook check needs i < j, got i={i}, j={j}")
    return hook_report(linearize(family, i, j))
