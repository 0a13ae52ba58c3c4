"""JSON payloads and text rendering for polynomials, matrices and analysis results."""

import json
from typing import TYPE_CHECKING, Any

from rich.table import Table

from spherikit.core.exactnum import to_text
from spherikit.core.polyalg import Poly, PolyMatrix, RatMatrix
from spherikit.core.types import BigRational, CodecConfig, JsonValue

if TYPE_CHECKING:
    from spherikit.analysis.conjectures import HookReport, SignVerdict, Witness
    from spherikit.analysis.expand import LinearizationExpansion, RecurrenceTriple, SparsityReport
    from spherikit.analysis.mop import PsiFamily
    from spherikit.analysis.papertables import TableDiff
    from spherikit.family.spherical import EigenData, SphericalFamily


def encode_rational(x: BigRational | int) -> str:
    """Canonical "p/q" text."""
    return to_text(x)


def encode_poly(p: Poly) -> list[str]:
    """
    Ascending coefficient list; the zero polynomial is [].

    Examples:
        >>> from fractions import Fraction
        >>> encode_poly(Poly((Fraction(-1, 2), Fraction(3, 2))))
        ['-1/2', '3/2']
    """
    return [to_text(c) for c in p.coeffs]


def encode_polymatrix(m: PolyMatrix) -> list[list[list[str]]]:
    return [[encode_poly(e) for e in row] for row in m.to_rows()]


def encode_ratmatrix(m: RatMatrix) -> list[list[str]]:
    return [[to_text(e) for e in row] for row in m.to_rows()]


def _degree(d: int | float) -> int | None:
    return None if d == float("-inf") else int(d)


def encode_family(family: "SphericalFamily") -> dict[str, JsonValue]:
    """Family-file payload: {"l", "n", "normalized", "members": {"<w>": ...}}."""
    return {
        "l": family.l,
        "n": family.n,
        "normalized": family.normalized,
        "members": {str(w): encode_polymatrix(family[w]) for w in family},
    }


def encode_expansion(expansion: "LinearizationExpansion") -> dict[str, JsonValue]:
    return {
        "l": expansion.l,
        "n": expansion.n,
        "i": expansion.i,
        "j": expansion.j,
        "kmin": expansion.kmin,
        "kmax": expansion.kmax,
        "coeffs": {str(k): encode_ratmatrix(a) for k, a in expansion.coeffs.items()},
        "residual_zero": expansion.residual_zero,
        "range_rule": expansion.rule.value,
    }


def encode_recurrence(triple: "RecurrenceTriple") -> dict[str, JsonValue]:
    return {
        "w": triple.w,
        "A": encode_ratmatrix(triple.A),
        "B": encode_ratmatrix(triple.B),
        "C": encode_ratmatrix(triple.C),
        "row_sums": [to_text(s) for s in triple.row_sums()],
    }


def encode_sparsity(report: "SparsityReport") -> dict[str, JsonValue]:
    return {
        "size": report.size,
        "vacuous": report.vacuous,
        "conforms": report.conforms,
        "offsets": {name: list(offs) for name, offs in report.offsets.items()},
        "a_two_diagonals": report.a_two_diagonals,
        "c_two_diagonals": report.c_two_diagonals,
        "b_tridiagonal": report.b_tridiagonal,
    }


def encode_eigen(eigen: "EigenData") -> dict[str, JsonValue]:
    return {
        "w": eigen.w,
        "Lambda": [to_text(x) for x in eigen.Lambda],
        "M": [to_text(x) for x in eigen.M],
    }


def encode_witness(witness: "Witness") -> dict[str, JsonValue]:
    return {
        "k": witness.k,
        "row": witness.row,
        "col": witness.col,
        "actual": witness.actual.value,
        "expected": witness.expected.value,
        "kind": witness.kind,
    }


def encode_hook_report(report: "HookReport") -> dict[str, JsonValue]:
    return {
        "check": "hook",
        "l": report.l,
        "n": report.n,
        "i": report.i,
        "j": report.j,
        "holds": report.holds,
        "outside_hypothesis": report.outside_hypothesis,
        "verdicts": [
            {
                "k": v.k,
                "in_range": v.in_range,
                "holds": v.holds,
                "grid": v.grid.to_rows(),
                "expected": v.expected.to_rows() if v.expected else None,
                "witnesses": [encode_witness(w) for w in v.witnesses],
            }
            for v in report.verdicts
        ],
        "coeffs": {str(k): encode_ratmatrix(a) for k, a in report.coeffs.items()},
    }


def encode_sign_verdict(verdict: "SignVerdict") -> dict[str, JsonValue]:
    return {
        "check": verdict.check,
        "n": verdict.n,
        "i": verdict.i,
        "j": verdict.j,
        "holds": verdict.holds,
        "outside_hypothesis": verdict.outside_hypothesis,
        "coefficients": {str(k): to_text(a) for k, a in verdict.coefficients.items()},
        "witnesses": [encode_witness(w) for w in verdict.witnesses],
        "note": verdict.note,
    }


def encode_psi(psi: "PsiFamily") -> dict[str, JsonValue]:
    return {
        "l": psi.type.l,
        "n": psi.type.n,
        "members": {str(j): encode_polymatrix(m) for j, m in psi.members.items()},
        "degrees": {str(j): _degree(d) for j, d in psi.degrees.items()},
    }


def encode_table_diff(diff: "TableDiff") -> dict[str, JsonValue]:
    return {
        "table": diff.which,
        "n": diff.n,
        "matches": diff.matches,
        "mismatches": [
            {
                "k": m.k,
                "row": m.row,
                "col": m.col,
                "table": to_text(m.table),
                "computed": to_text(m.computed),
            }
            for m in diff.mismatches
        ],
    }


def dumps(payload: Any, config: CodecConfig | None = None) -> str:
    """Serialize deterministically: sorted keys, fixed indentation, ASCII only."""
    config = config or CodecConfig()
    return json.dumps(
        payload,
        indent=config.indent or None,
        sort_keys=config.sort_keys,
        ensure_ascii=True,
    )


# Text rendering


def format_poly(p: Poly) -> str:
    """Ascending text form, e.g. "(-1/2) + (3/2)t"."""
    return str(p)


def ratmatrix_table(m: RatMatrix, title: str | None = None) -> Table:
    """Right-aligned rich table of a rational matrix."""
    table = Table(title=title, show_header=False, box=None, pad_edge=False)
    for _ in range(m.cols):
        table.add_column(justify="right")
    for row in m.to_rows():
        table.add_row(*(to_text(e) for e in row))
    return table


def polymatrix_table(m: PolyMatrix, title: str | None = None) -> Table:
    """Rich table of a polynomial matrix, one cell per entry."""
    table = Table(title=title, show_header=False, show_lines=m.rows > 1)
    for _ in range(m.cols):
        table.add_column(justify="left")
    for row in m.to_rows():
        table.add_row(*(format_poly(e) for e in row))
    return table
