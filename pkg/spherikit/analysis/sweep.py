"""Grid sweeps over (n, i, j, w) cells for the conjecture and identity checks."""

import logging
import operator
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Any

from spherikit.analysis.conjectures import check_alt_sign_l0, check_hook, check_n01_facts
from spherikit.analysis.expand import linearize, recurrence, sparsity_report, verify_recurrence
from spherikit.analysis.mop import build_psi_family, verify_psi_recurrence
from spherikit.analysis.papertables import TableName, compare_with_computed, load_table
from spherikit.core import encoder
from spherikit.core.exactnum import ONE
from spherikit.core.polyalg import PolyMatrix
from spherikit.core.types import (
    CheckName,
    EmptySweep,
    FamilyError,
    SpherikitError,
    SweepConfig,
)
from spherikit.family.jacobi import jacobi_recurrence
from spherikit.family.spherical import (
    SphericalFamily,
    SphericalType,
    check_lambda_consistency,
    load_family_file,
)

logger = logging.getLogger(__name__)

PUBLISHED_TABLES: tuple[TableName, ...] = ("l0_i3_j4", "l1_i2_j6")


@dataclass(frozen=True, order=True)
class Cell:
    """One independent unit of a sweep, ordered canonically by (n, i, j, w)."""

    n: int
    i: int
    j: int
    w: int
    check: CheckName = field(compare=False)
    l: int = field(compare=False)
    table: TableName | None = field(default=None, compare=False)


@dataclass(frozen=True)
class CellResult:
    """Verdict for one cell. `error` is set when the computation itself failed."""

    cell: Cell
    holds: bool
    summary: str
    payload: dict[str, Any] = field(default_factory=dict)
    outside_hypothesis: bool = False
    error: str | None = None


@dataclass(frozen=True)
class SweepReport:
    """All cell results in canonical order."""

    config: SweepConfig
    results: tuple[CellResult, ...]

    @property
    def errors(self) -> tuple[CellResult, ...]:
        return tuple(r for r in self.results if r.error is not None)

    @property
    def violations(self) -> tuple[CellResult, ...]:
        return tuple(r for r in self.results if r.error is None and not r.holds)

    @property
    def holds(self) -> bool:
        return not self.errors and not self.violations

    @property
    def exit_code(self) -> int:
        """0 when every cell holds, 2 on a violated verdict, 1 on a failed computation."""
        if self.errors:
            return 1
        return 2 if self.violations else 0

    def to_payload(self) -> dict[str, Any]:
        return {
            "check": self.config.which,
            "l": self.config.l,
            "holds": self.holds,
            "cells": [
                {
                    "n": r.cell.n,
                    "i": r.cell.i,
                    "j": r.cell.j,
                    "w": r.cell.w,
                    "holds": r.holds,
                    "summary": r.summary,
                    "error": r.error,
                    "result": r.payload,
                }
                for r in self.results
            ],
        }


def plan_cells(config: SweepConfig) -> list[Cell]:
    """
    Expand a sweep configuration into cells.

    Product checks pair every i with every j >= i (j > i for the hook check); recurrence and
    lambda cells run over w = 0..w_max; the psi check uses one cell per n.
    """
    which, l = config.which, config.l
    ns = sorted(set(config.n_values))
    if which in ("alt-sign", "n01", "hook"):
        strict = which == "hook"
        return [
            Cell(n, i, j, 0, which, l)
            for n in ns
            for i in sorted(set(config.i_values))
            for j in sorted(set(config.j_values))
            if (i < j if strict else i <= j)
        ]
    if which == "paper-tables":
        cells = []
        for name in PUBLISHED_TABLES:
            table = load_table(name)
            cells.extend(Cell(n, table.i, table.j, 0, which, table.l, name) for n in ns)
        return sorted(cells)
    if which in ("recurrence", "lambda"):
        return [Cell(n, 0, 0, w, which, l) for n in ns for w in range(config.w_max + 1)]
    return [Cell(n, 0, 0, config.w_max, which, l) for n in ns]


@lru_cache(maxsize=8)
def _file_family(path: str) -> SphericalFamily:
    return load_family_file(path)


def family_for(n: int, l: int, family_file: str | None = None) -> SphericalFamily:
    """An empty normalized family built on demand, or the loaded family file."""
    if family_file is None:
        return SphericalFamily(SphericalType(n, l), True)
    family = _file_family(family_file)
    if (family.n, family.l) != (n, l):
        raise FamilyError(
            f"family file is for (n, l) = ({family.n}, {family.l}), sweep asked for ({n}, {l})"
        )
    return family


def _check_product(cell: Cell, family: SphericalFamily) -> CellResult:
    if cell.check == "hook":
        report = check_hook(family, cell.i, cell.j)
        bad = report.witnesses
        summary = "hook pattern holds" if report.holds else f"{len(bad)} witness(es)"
        return CellResult(
            cell,
            report.holds,
            summary,
            encoder.encode_hook_report(report),
            report.outside_hypothesis,
        )
    checker = check_alt_sign_l0 if cell.check == "alt-sign" else check_n01_facts
    verdict = checker(family, cell.i, cell.j)
    summary = "signs as expected" if verdict.holds else f"{len(verdict.witnesses)} witness(es)"
    return CellResult(
        cell,
        verdict.holds,
        summary,
        encoder.encode_sign_verdict(verdict),
        verdict.outside_hypothesis,
    )


def _check_table(cell: Cell, family: SphericalFamily) -> CellResult:
    assert cell.table is not None
    expansion = linearize(family, cell.i, cell.j)
    diff = compare_with_computed(cell.table, cell.n, expansion)
    target = (ONE * (cell.l + 1),) * (cell.l + 1)
    computed_sums = expansion.total().row_sums() == target
    table_total = reduce(operator.add, load_table(cell.table).at(cell.n).values())
    table_sums = table_total.row_sums() == target
    holds = diff.matches and expansion.residual_zero and computed_sums and table_sums
    payload = encoder.encode_table_diff(diff)
    payload.update(computed_row_sums=computed_sums, table_row_sums=table_sums)
    summary = (
        f"{cell.table} matches"
        if holds
        else f"{cell.table}: {len(diff.mismatches)} mismatch(es), row sums "
        f"computed={computed_sums} table={table_sums}"
    )
    return CellResult(cell, holds, summary, payload)


def _check_recurrence(cell: Cell, family: SphericalFamily) -> CellResult:
    triple = recurrence(family, cell.w)
    exact = verify_recurrence(family, triple)
    sums = all(s == 1 for s in triple.row_sums())
    holds = exact and sums
    payload = encoder.encode_recurrence(triple)
    payload["identity_exact"] = exact
    payload["sparsity"] = encoder.encode_sparsity(sparsity_report(triple, family.l))
    if family.l == 0:
        jacobi = jacobi_recurrence(1, family.n, cell.w)
        matches = (triple.A[0, 0], triple.B[0, 0], triple.C[0, 0]) == jacobi
        payload["jacobi_match"] = matches
        holds = holds and matches
    summary = "recurrence verified" if holds else f"identity={exact} row_sums={sums}"
    return CellResult(cell, holds, summary, payload)


def _check_psi(cell: Cell, family: SphericalFamily) -> CellResult:
    psi = build_psi_family(family, cell.w + 1)
    base = psi[0] == PolyMatrix.identity(family.size)
    transfer = {
        w: verify_psi_recurrence(psi, recurrence(family, w)) for w in range(cell.w + 1)
    }
    holds = base and all(transfer.values())
    payload = encoder.encode_psi(psi)
    payload.update(
        identity_at_zero=base,
        recurrence_transfer={str(w): ok for w, ok in transfer.items()},
        degree_drops=psi.degree_drops(),
    )
    failed = [w for w, ok in transfer.items() if not ok]
    summary = "Psi verified" if holds else f"Psi(0)=I: {base}, transfer fails at w={failed}"
    return CellResult(cell, holds, summary, payload)


def run_cell(cell: Cell, family_file: str | None = None) -> CellResult:
    """Evaluate one cell; library errors become an errored result rather than propagating."""
    try:
        if cell.check == "lambda":
            ok = check_lambda_consistency(cell.n, cell.w)
            return CellResult(cell, ok, "row parameters equal Lambda" if ok else "mismatch")
        family = family_for(cell.n, cell.l, family_file)
        if cell.check in ("alt-sign", "n01", "hook"):
            return _check_product(cell, family)
        if cell.check == "paper-tables":
            return _check_table(cell, family)
        if cell.check == "recurrence":
            return _check_recurrence(cell, family)
        return _check_psi(cell, family)
    except SpherikitError as e:
        logger.warning("cell %s failed: %s", cell, e)
        return CellResult(cell, False, "error", error=f"{type(e).__name__}: {e}")


def iter_results(config: SweepConfig) -> Iterator[CellResult]:
    """Yield cell results as they complete (completion order, not canonical order)."""
    cells = plan_cells(config)
    if not cells:
        raise EmptySweep(
            f"sweep {config.which} plans no cells over i={list(config.i_values)} "
            f"j={list(config.j_values)}"
            + (" (hook needs i < j)" if config.which == "hook" else "")
        )
    logger.info("sweep %s: %d cells on %d worker(s)", config.which, len(cells), config.workers)
    if config.workers == 1:
        for cell in cells:
            yield run_cell(cell, config.family_file)
        return
    with ProcessPoolExecutor(max_workers=config.workers) as pool:
        futures = [pool.submit(run_cell, cell, config.family_file) for cell in cells]
        for future in as_completed(futures):
            yield future.result()


def run_sweep(
    config: SweepConfig, on_result: Callable[[CellResult], None] | None = None
) -> SweepReport:
    """
    Run every cell of a sweep.

    Args:
        config: Sweep configuration
        on_result: Called with each result as soon as it completes

    Returns:
        Report with results sorted by (n, i, j, w)

    Raises:
        EmptySweep: If the configuration plans no cells
    """
    results = []
    for result in iter_results(config):
        if on_result is not None:
            on_result(result)
        results.append(result)
    return SweepReport(config, tuple(sorted(results, key=lambda r: r.cell)))
