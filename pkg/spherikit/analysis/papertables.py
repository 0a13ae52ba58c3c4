"""Published linearization coefficients as rational functions of n, and exact comparison."""

from collections.abc import Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Literal

import sympy as sp

from spherikit.analysis.expand import LinearizationExpansion
from spherikit.core.polyalg import RatMatrix
from spherikit.core.types import ShapeMismatch

TableName = Literal["l0_i3_j4", "l1_i2_j6"]

N = sp.Symbol("n")


@dataclass(frozen=True)
class RationalFunctionOfN:
    """A rational function of n held as text and evaluated exactly."""

    text: str

    @cached_property
    def expr(self) -> sp.Expr:
        return sp.sympify(self.text, locals={"n": N})

    def __call__(self, n: int) -> Fraction:
        value = sp.Rational(self.expr.subs(N, n))
        return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class Correction:
    """One fix applied to a transcribed entry, with its justification."""

    table: TableName
    k: int
    row: int
    col: int
    before: str
    after: str
    reason: str


@dataclass(frozen=True)
class PublishedTable:
    """Coefficient matrices k -> rows of rational functions of n."""

    which: TableName
    l: int
    i: int
    j: int
    entries: Mapping[int, tuple[tuple[RationalFunctionOfN, ...], ...]]

    @property
    def kmin(self) -> int:
        return min(self.entries)

    @property
    def kmax(self) -> int:
        return max(self.entries)

    def at(self, n: int) -> dict[int, RatMatrix]:
        """Evaluate every entry at n."""
        return {
            k: RatMatrix.from_rows([[f(n) for f in row] for row in rows])
            for k, rows in sorted(self.entries.items())
        }


ZERO_ENTRY = "0"

# Scalar case l = 0: Phi(3, t) Phi(4, t) = sum_{k=1}^{7} a_k Phi(k, t).
_L0_I3_J4: dict[int, tuple[tuple[str, ...], ...]] = {
    1: (("(n+2)*(n+3)*(n+4)/((n+8)*(n+9)*(n+10))",),),
    2: (("-6*(n-1)*(n+3)*(n+4)*(n+6)**2/((n+7)*(n+8)*(n+9)*(n+10)*(n+11))",),),
    3: (("3*(n+4)*(n+5)*(7*n**3+52*n**2+67*n+162)/((n+7)*(n+9)*(n+10)*(n+11)*(n+12))",),),
    4: (("-4*(n-1)*(n+6)*(11*n**3+123*n**2+436*n+648)/((n+8)*(n+9)*(n+11)*(n+12)*(n+13))",),),
    5: (
        (
            "3*(n+5)*(n+6)*(n+7)*(19*n**3+155*n**2+162*n+504)"
            "/((n+8)*(n+9)*(n+10)*(n+11)*(n+13)*(n+14))",
        ),
    ),
    6: (("-42*(n-1)*(n+5)*(n+6)**2*(n+7)*(n+8)/((n+9)*(n+10)*(n+11)*(n+12)*(n+13)*(n+15))",),),
    7: (("14*(n+5)*(n+6)**2*(n+7)**2*(n+8)/((n+10)*(n+11)*(n+12)*(n+13)*(n+14)*(n+15))",),),
}

# Case l = 1: Phi(2, t) Phi(6, t) = sum_{k=3}^{9} A_k Phi(k, t).
# Two-line numerators (M22, N22) are joined over their shared denominator.
_L1_I2_J6: dict[int, tuple[tuple[str, ...], ...]] = {
    3: (
        (ZERO_ENTRY, ZERO_ENTRY),
        (
            ZERO_ENTRY,
            "16*(n+4)*(n+5)*(n+6)**2*(n+7)**2/((n+11)*(n+12)*(n+13)*(n+14)*(n+15)*(n+16))",
        ),
    ),
    4: (
        (
            "15*(n+5)**2*(n+6)*(n+8)/(2*(n+12)*(n+13)*(n+14)*(n+15))",
            "5*(n+5)*(n+6)*(4*n**2+55*n+216)/(6*(n+13)*(n+14)*(n+15)*(n+16))",
        ),
        (
            "(n+5)*(n+6)*(n+7)*(8*n**2+153*n+724)/(2*(n+12)*(n+13)*(n+14)*(n+15)*(n+16))",
            "-5*(n+6)*(n+7)*(248*n**4+4665*n**3+27202*n**2+45137*n-23252)"
            "/(12*(n+11)*(n+13)*(n+14)*(n+15)*(n+16)*(n+17))",
        ),
    ),
    5: (
        (
            "-(n+5)*(n+6)*(185*n**3+3284*n**2+15732*n+10368)"
            "/(6*(n+7)*(n+12)*(n+14)*(n+15)*(n+16))",
            "-(n+5)*(85*n**4+1817*n**3+11380*n**2+7072*n-93460)"
            "/(7*(n+7)*(n+13)*(n+15)*(n+16)*(n+17))",
        ),
        (
            "-(n+6)**2*(170*n**4+4735*n**3+42068*n**2+99767*n-168628)"
            "/(12*(n+7)*(n+12)*(n+14)*(n+15)*(n+16)*(n+17))",
            "(4327*n**7+163698*n**6+2480127*n**5+19091004*n**4+78090428*n**3"
            "+163454544*n**2+172290528*n+132098688)"
            "/(14*(n+7)*(n+12)*(n+13)*(n+15)*(n+16)*(n+17)*(n+18))",
        ),
    ),
    6: (
        (
            "2*(193*n**5+5832*n**4+65284*n**3+328884*n**2+727621*n+634422)"
            "/(7*(n+8)*(n+13)*(n+14)*(n+16)*(n+17))",
            "(171*n**5+4729*n**4+45764*n**3+188570*n**2+442336*n+1133640)"
            "/(8*(n+8)*(n+14)*(n+15)*(n+17)*(n+18))",
        ),
        (
            "(171*n**6+7071*n**5+116213*n**4+959879*n**3+4245034*n**2+10640548*n+15755112)"
            "/(7*(n+8)*(n+13)*(n+14)*(n+16)*(n+17)*(n+18))",
            "-(4269*n**7+169934*n**6+2677678*n**5+21066480*n**4+85737209*n**3"
            "+169428298*n**2+129986220*n-46794888)"
            "/(8*(n+8)*(n+13)*(n+14)*(n+15)*(n+17)*(n+18)*(n+19))",
        ),
    ),
    7: (
        (
            "-3*(n+5)*(129*n**4+3710*n**3+36430*n**2+129960*n+76536)"
            "/(8*(n+9)*(n+14)*(n+15)*(n+16)*(n+18))",
            "-(n+5)*(n+10)*(57*n**3+917*n**2+2274*n-11268)"
            "/(3*(n+9)*(n+15)*(n+16)*(n+17)*(n+19))",
        ),
        (
            "-3*(57*n**6+2505*n**5+44489*n**4+389955*n**3+1576582*n**2+1465908*n-4434696)"
            "/(8*(n+9)*(n+14)*(n+15)*(n+16)*(n+18)*(n+19))",
            "2*(n+10)*(829*n**6+27979*n**5+352571*n**4+2024521*n**3+5197384*n**2"
            "+5712396*n+5004720)"
            "/(3*(n+9)*(n+14)*(n+15)*(n+16)*(n+17)*(n+19)*(n+20))",
        ),
    ),
    8: (
        (
            "5*(n+5)*(n+6)*(21*n**2+401*n+1920)/(6*(n+15)*(n+16)*(n+17)*(n+18))",
            "15*(n+5)*(n+6)*(n+8)*(n+11)/(2*(n+16)*(n+17)*(n+18)*(n+19))",
        ),
        (
            "5*(n+6)*(10*n**4+329*n**3+4942*n**2+36611*n+96300)"
            "/(6*(n+15)*(n+16)*(n+17)*(n+18)*(n+20))",
            "-3*(n+6)*(n+11)*(430*n**4+9773*n**3+67728*n**2+129129*n-59220)"
            "/(4*(n+15)*(n+16)*(n+17)*(n+18)*(n+19)*(n+21))",
        ),
    ),
    9: (
        (ZERO_ENTRY, ZERO_ENTRY),
        (
            "99*(n+4)*(n+6)*(n+7)*(n+10)/(4*(n+16)*(n+17)*(n+18)*(n+19)*(n+20))",
            "165*(n+4)*(n+6)*(n+7)*(n+8)*(n+10)*(n+12)"
            "/(2*(n+16)*(n+17)*(n+18)*(n+19)*(n+20)*(n+21))",
        ),
    ),
}

CORRECTIONS: tuple[Correction, ...] = (
    Correction(
        table="l1_i2_j6",
        k=5,
        row=1,
        col=2,
        before="-93460",
        after="-93560",
        reason=(
            "row 1 of sum_k A_k evaluates to 2 - 25/129948 at n = 0 with the printed constant; "
            "129948 is the denominator of this entry at n = 0 and the changed digit restores 2"
        ),
    ),
)

_SOURCES: dict[TableName, tuple[int, int, int, dict[int, tuple[tuple[str, ...], ...]]]] = {
    "l0_i3_j4": (0, 3, 4, _L0_I3_J4),
    "l1_i2_j6": (1, 2, 6, _L1_I2_J6),
}


def _apply(which: TableName, k: int, r: int, c: int, text: str) -> str:
    for fix in CORRECTIONS:
        if (fix.table, fix.k, fix.row, fix.col) == (which, k, r + 1, c + 1):
            if fix.before not in text:
                raise ValueError(f"correction {fix} does not apply to {text!r}")
            text = text.replace(fix.before, fix.after)
    return text


def load_table(which: TableName, corrected: bool = True) -> PublishedTable:
    """
    Build one of the published tables.

    Args:
        which: "l0_i3_j4" (scalars a_1..a_7) or "l1_i2_j6" (matrices A_3..A_9)
        corrected: Apply the entries of CORRECTIONS (default: True)
    """
    l, i, j, source = _SOURCES[which]
    entries = {
        k: tuple(
            tuple(
                RationalFunctionOfN(_apply(which, k, r, c, text) if corrected else text)
                for c, text in enumerate(row)
            )
            for r, row in enumerate(rows)
        )
        for k, rows in source.items()
    }
    return PublishedTable(which=which, l=l, i=i, j=j, entries=entries)


def eval_table(which: TableName, n: int, corrected: bool = True) -> dict[int, RatMatrix]:
    """
    Evaluate a table at n.

    Examples:
        >>> str(eval_table("l0_i3_j4", 2)[1][0, 0])
        '1/11'
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return load_table(which, corrected).at(n)


@dataclass(frozen=True)
class Mismatch:
    """One entry where the table and the computation disagree (1-based row and column)."""

    k: int
    row: int
    col: int
    table: Fraction
    computed: Fraction


@dataclass(frozen=True)
class TableDiff:
    """Entrywise comparison of a table with a computed expansion."""

    which: TableName
    n: int
    mismatches: tuple[Mismatch, ...] = field(default_factory=tuple)

    @property
    def matches(self) -> bool:
        return not self.mismatches


def compare_with_computed(
    which: TableName, n: int, expansion: LinearizationExpansion, corrected: bool = True
) -> TableDiff:
    """
    Compare a table with a computed expansion bit-exactly.

    Raises:
        ShapeMismatch: The expansion is for another (n, l, i, j) or covers another index range
    """
    table = load_table(which, corrected)
    if expansion.n != n:
        raise ShapeMismatch(f"expansion is for n = {expansion.n}, compared at n = {n}")
    if (expansion.l, expansion.i, expansion.j) != (table.l, table.i, table.j):
        raise ShapeMismatch(
            f"table {which} is for (l, i, j) = ({table.l}, {table.i}, {table.j}), "
            f"expansion is ({expansion.l}, {expansion.i}, {expansion.j})"
        )
    if (expansion.kmin, expansion.kmax) != (table.kmin, table.kmax):
        raise ShapeMismatch(
            f"table covers k={table.kmin}..{table.kmax}, "
            f"expansion covers k={expansion.kmin}..{expansion.kmax}"
        )

    mismatches = []
    for k, expected in table.at(n).items():
        got = expansion.coeffs[k]
        for r in range(expected.rows):
            for c in range(expected.cols):
                if expected[r, c] != got[r, c]:
                    mismatches.append(Mismatch(k, r + 1, c + 1, expected[r, c], got[r, c]))
    return TableDiff(which=which, n=n, mismatches=tuple(mismatches))
