"""Command-line interface for spherikit."""

import logging
import sys
from pathlib import Path
from typing import Any, NoReturn

import click
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from spherikit import __version__
from spherikit.analysis.expand import linearize, recurrence, sparsity_report
from spherikit.analysis.mop import build_psi
from spherikit.analysis.sweep import CellResult, SweepReport, run_sweep
from spherikit.core import encoder
from spherikit.core.exactnum import to_text
from spherikit.core.polyalg import PolyMatrix
from spherikit.core.types import CodecConfig, ParserMode, RangeRule, SpherikitError, SweepConfig
from spherikit.family.spherical import (
    SphericalFamily,
    SphericalType,
    build_family,
    build_phi,
    eigen_matrices,
    load_family_file,
)

console = Console()
err_console = Console(stderr=True)

EXIT_ERROR = 1


class IndexRange(click.ParamType):
    """An inclusive integer range written "a..b", or a single integer."""

    name = "range"

    def convert(
        self, value: Any, param: click.Parameter | None, ctx: click.Context | None
    ) -> tuple[int, ...]:
        if isinstance(value, tuple):
            return value
        text = str(value).strip()
        lo, sep, hi = text.partition("..")
        try:
            start = int(lo)
            stop = int(hi) if sep else start
        except ValueError:
            self.fail(f"{value!r} is not an integer or a range a..b", param, ctx)
        if start < 0 or stop < start:
            self.fail(f"{value!r} must satisfy 0 <= a <= b", param, ctx)
        return tuple(range(start, stop + 1))


INDEX_RANGE = IndexRange()

format_option = click.option(
    "-f",
    "--format",
    "output_format",
    type=click.Choice(["text", "json"], case_sensitive=False),
    default="text",
    help="Output format",
)
family_file_option = click.option(
    "--family-file",
    type=click.Path(exists=True, dir_okay=False),
    help="JSON family file (required for l >= 2)",
)
mode_option = click.option(
    "--mode",
    type=click.Choice(["strict", "permissive"], case_sensitive=False),
    default="strict",
    help="Parser mode for --family-file",
)


def _fail(message: str) -> NoReturn:
    err_console.print(f"❌ Error: {message}", style="red")
    sys.exit(EXIT_ERROR)


class SpherikitGroup(click.Group):
    """Group that reports usage errors with exit code 1, keeping 2 for violated checks."""

    def main(self, *args: Any, standalone_mode: bool = True, **kwargs: Any) -> Any:
        if not standalone_mode:
            return super().main(*args, standalone_mode=False, **kwargs)
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_ERROR if isinstance(e, click.UsageError) else e.exit_code)
        except click.Abort:
            err_console.print("Aborted!", style="red")
            sys.exit(EXIT_ERROR)
        sys.exit(rv if isinstance(rv, int) else 0)


def _family(
    n: int,
    l: int,
    family_file: str | None,
    mode: str,
    normalized: bool = True,
    swap_columns: bool = False,
) -> SphericalFamily:
    if family_file is not None:
        family = load_family_file(family_file, CodecConfig(mode=ParserMode(mode)))
        if (family.n, family.l) != (n, l):
            raise click.UsageError(
                f"family file is for (n, l) = ({family.n}, {family.l}), not ({n}, {l})"
            )
        return family
    if l > 1:
        raise click.UsageError("closed-form families exist for l <= 1 only; pass --family-file")
    return SphericalFamily(SphericalType(n, l), normalized, swap_columns=swap_columns)


def _emit_json(payload: Any, output: str | None = None) -> None:
    text = encoder.dumps(payload)
    if output:
        Path(output).write_text(text + "\n", encoding="utf-8")
        err_console.print(f"✅ Wrote {output}", style="green")
    else:
        click.echo(text)


def _print_polymatrix(m: PolyMatrix, title: str | None = None) -> None:
    if m.shape == (1, 1):
        if title:
            console.print(title, style="bold")
        click.echo(encoder.format_poly(m[0, 0]))
    else:
        console.print(encoder.polymatrix_table(m, title))


@click.group(cls=SpherikitGroup)
@click.version_option(version=__version__)
@click.option("-v", "--verbose", count=True, help="Log progress (-vv for debug)")
def main(verbose: int) -> None:
    """Exact spherical functions on the complex projective plane: linearization and recurrences."""
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG if verbose > 1 else logging.INFO,
            format="%(message)s",
            handlers=[RichHandler(console=err_console, show_path=False)],
        )


@main.command()
@click.option("--l", "l", type=click.IntRange(min=0), required=True, help="Matrix size is l + 1")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Type parameter n")
@click.option("--w", "w", type=click.IntRange(min=0), required=True, help="Family index w")
@click.option("--normalized/--raw", default=True, help="Normalize to all ones at t = 1")
@click.option("--swap-columns", is_flag=True, help="Reverse the component order of l = 1 rows")
@family_file_option
@mode_option
@format_option
def build(
    l: int,
    n: int,
    w: int,
    normalized: bool,
    swap_columns: bool,
    family_file: str | None,
    mode: str,
    output_format: str,
) -> None:
    """Construct one member Phi(w, t).

    Examples:

        \b
        spherikit build --l 0 --n 0 --w 1
        spherikit build --l 1 --n 0 --w 0 --format json
    """
    try:
        if family_file is None and l > 1:
            _fail("closed-form families exist for l <= 1 only; pass --family-file")
        if family_file is not None:
            m = _family(n, l, family_file, mode)[w]
        else:
            m = build_phi(n, l, w, normalized, swap_columns)
        if output_format == "json":
            _emit_json(encoder.encode_polymatrix(m))
        else:
            _print_polymatrix(m, f"Phi({w}, t) of type (n, l) = ({n}, {l})")
    except (SpherikitError, click.UsageError) as e:
        _fail(str(e))


@main.command()
@click.option("--l", "l", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--w-max", type=click.IntRange(min=0), required=True, help="Largest member index")
@click.option("--normalized/--raw", default=True)
@click.option("--swap-columns", is_flag=True)
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Output file")
def export(
    l: int, n: int, w_max: int, normalized: bool, swap_columns: bool, output: str | None
) -> None:
    """Write members 0..w_max as a family file.

    Examples:

        \b
        spherikit export --l 1 --n 2 --w-max 12 -o family.json
    """
    try:
        if l > 1:
            _fail("closed-form families exist for l <= 1 only")
        family = build_family(n, l, w_max, normalized, swap_columns)
        _emit_json(encoder.encode_family(family), output)
    except SpherikitError as e:
        _fail(str(e))


@main.command(name="linearize")
@click.option("--l", "l", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--i", "i", type=click.IntRange(min=0), required=True)
@click.option("--j", "j", type=click.IntRange(min=0), required=True)
@click.option(
    "--range-rule",
    type=click.Choice([r.value for r in RangeRule]),
    default=RangeRule.MAX.value,
    help="Lower end of the index range: max{j-i-l,0} or min{j-i-l,0}",
)
@click.option("--swap-columns", is_flag=True)
@family_file_option
@mode_option
@format_option
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write JSON to a file")
def linearize_cmd(
    l: int,
    n: int,
    i: int,
    j: int,
    range_rule: str,
    swap_columns: bool,
    family_file: str | None,
    mode: str,
    output_format: str,
    output: str | None,
) -> None:
    """Expand Phi(i, t) Phi(j, t) = sum_k A_k Phi(k, t).

    Examples:

        \b
        spherikit linearize --l 0 --n 0 --i 1 --j 1
        spherikit linearize --l 1 --n 0 --i 2 --j 6 --format json
    """
    try:
        if i > j:
            _fail(f"expected i <= j, got i={i}, j={j}")
        with err_console.status(f"[bold green]Linearizing Phi({i}) Phi({j})..."):
            family = _family(n, l, family_file, mode, swap_columns=swap_columns)
            expansion = linearize(family, i, j, RangeRule(range_rule))
        if output_format == "json" or output:
            _emit_json(encoder.encode_expansion(expansion), output)
            return
        title = (
            f"Phi({i}, t) Phi({j}, t), (n, l) = ({n}, {l}), "
            f"k = {expansion.kmin}..{expansion.kmax}"
        )
        if l == 0 or family.size == 1:
            table = Table(title=title)
            table.add_column("k", justify="right", style="cyan")
            table.add_column("a_k", justify="right")
            for k in expansion.indices:
                table.add_row(str(k), to_text(expansion.scalar(k)))
            console.print(table)
        else:
            console.print(title, style="bold")
            for k, a in expansion.coeffs.items():
                console.print(encoder.ratmatrix_table(a, f"A_{k}"))
        console.print(f"residual zero: {expansion.residual_zero}")
    except (SpherikitError, click.UsageError) as e:
        _fail(str(e))


@main.command(name="recurrence")
@click.option("--l", "l", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--w", "w", type=click.IntRange(min=0), required=True)
@family_file_option
@mode_option
@format_option
def recurrence_cmd(
    l: int, n: int, w: int, family_file: str | None, mode: str, output_format: str
) -> None:
    """Three-term recurrence A_w Phi(w-1) + B_w Phi(w) + C_w Phi(w+1) = t Phi(w).

    Examples:

        \b
        spherikit recurrence --l 0 --n 0 --w 0
    """
    try:
        family = _family(n, l, family_file, mode)
        triple = recurrence(family, w)
        report = sparsity_report(triple, family.l)
        if output_format == "json":
            payload = encoder.encode_recurrence(triple)
            payload["sparsity"] = encoder.encode_sparsity(report)
            _emit_json(payload)
            return
        for name, m in (("A", triple.A), ("B", triple.B), ("C", triple.C)):
            console.print(encoder.ratmatrix_table(m, f"{name}_{w}"))
        sums = ", ".join(to_text(s) for s in triple.row_sums())
        console.print(f"row sums of A + B + C: {sums}")
        if report.vacuous:
            shape = "vacuous (size <= 2)"
        else:
            shape = "conforms" if report.conforms else "does not conform"
        console.print(f"diagonal structure: {shape}")
    except (SpherikitError, click.UsageError) as e:
        _fail(str(e))


@main.command(name="psi")
@click.option("--l", "l", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--j", "j", type=click.IntRange(min=0), required=True)
@family_file_option
@mode_option
@format_option
def psi_cmd(
    l: int, n: int, j: int, family_file: str | None, mode: str, output_format: str
) -> None:
    """Matrix orthogonal polynomial Psi(j, t) = Phi(j, t) Phi(0, t)^-1.

    Examples:

        \b
        spherikit psi --l 1 --n 0 --j 3
    """
    try:
        with err_console.status(f"[bold green]Dividing out Phi(0) for j = {j}..."):
            psi = build_psi(_family(n, l, family_file, mode), j)
        if output_format == "json":
            _emit_json(encoder.encode_polymatrix(psi))
        else:
            title = f"Psi({j}, t) of type (n, l) = ({n}, {l}), degree {psi.degree}"
            _print_polymatrix(psi, title)
    except (SpherikitError, click.UsageError) as e:
        _fail(str(e))


@main.command(name="eigen")
@click.option("--l", "l", type=click.IntRange(min=0), required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--w", "w", type=click.IntRange(min=0), required=True)
@format_option
def eigen_cmd(l: int, n: int, w: int, output_format: str) -> None:
    """Diagonal eigenvalue matrices Lambda and M at index w.

    Examples:

        \b
        spherikit eigen --l 1 --n 0 --w 1
    """
    try:
        eigen = eigen_matrices(SphericalType(n, l), w)
        if output_format == "json":
            _emit_json(encoder.encode_eigen(eigen))
            return
        table = Table(title=f"Eigenvalues at w = {w}, (n, l) = ({n}, {l})")
        table.add_column("i", justify="right", style="cyan")
        table.add_column("Lambda(i,i)", justify="right")
        table.add_column("M(i,i)", justify="right")
        for idx, (lam, mu) in enumerate(zip(eigen.Lambda, eigen.M), start=1):
            table.add_row(str(idx), to_text(lam), to_text(mu))
        console.print(table)
    except SpherikitError as e:
        _fail(str(e))


def _stream(result: CellResult) -> None:
    c = result.cell
    where = f"n={c.n} i={c.i} j={c.j} w={c.w}"
    if result.error:
        err_console.print(f"⚠️  {where}: {result.error}", style="yellow")
    elif result.holds:
        err_console.print(f"✅ {where}: {result.summary}", style="green")
    else:
        err_console.print(f"❌ {where}: {result.summary}", style="red")


def _print_report(report: SweepReport) -> None:
    table = Table(title=f"check {report.config.which} (l = {report.config.l})")
    for name in ("n", "i", "j", "w"):
        table.add_column(name, justify="right", style="cyan")
    table.add_column("verdict")
    table.add_column("details")
    for r in report.results:
        verdict = "error" if r.error else ("holds" if r.holds else "VIOLATED")
        detail = r.error or r.summary
        if r.outside_hypothesis:
            detail += " (outside hypothesis)"
        table.add_row(str(r.cell.n), str(r.cell.i), str(r.cell.j), str(r.cell.w), verdict, detail)
    console.print(table)
    for r in report.violations:
        witnesses = list(r.payload.get("witnesses", []))
        for verdict in r.payload.get("verdicts", []):
            witnesses.extend(verdict["witnesses"])
        for w in witnesses:
            console.print(
                f"  n={r.cell.n} i={r.cell.i} j={r.cell.j}: k={w['k']} "
                f"({w['row']}, {w['col']}) is {w['actual']}, "
                f"expected {w['expected']} [{w['kind']}]",
                markup=False,
            )
    summary = (
        f"{len(report.results)} cells, {len(report.violations)} violated, "
        f"{len(report.errors)} errored"
    )
    console.print(summary, style="green bold" if report.holds else "red bold")


@main.command()
@click.option(
    "--which",
    type=click.Choice(["alt-sign", "n01", "hook", "paper-tables", "recurrence", "lambda", "psi"]),
    required=True,
    help="Check to sweep",
)
@click.option("--l", "l", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("--n", "n_values", type=INDEX_RANGE, required=True, help="n or a range a..b")
@click.option("--i-min", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--i-max", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--j-min", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--j-max", type=click.IntRange(min=0), default=1, show_default=True)
@click.option("--w-max", type=click.IntRange(min=0), default=10, show_default=True)
@click.option(
    "--workers",
    type=click.IntRange(min=1, max=256),
    default=1,
    envvar="SPHERIKIT_WORKERS",
    show_default=True,
    help="Worker processes (env: SPHERIKIT_WORKERS)",
)
@click.option("--permissive", is_flag=True, help="Evaluate n <= 1 for alt-sign and hook anyway")
@family_file_option
@format_option
@click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the JSON report")
def check(
    which: str,
    l: int,
    n_values: tuple[int, ...],
    i_min: int,
    i_max: int,
    j_min: int,
    j_max: int,
    w_max: int,
    workers: int,
    permissive: bool,
    family_file: str | None,
    output_format: str,
    output: str | None,
) -> None:
    """Sweep a conjecture or identity over a grid; exit 0 holds, 2 violated, 1 error.

    Examples:

        \b
        spherikit check --which alt-sign --n 2..8 --i-max 8 --j-max 8
        spherikit check --which hook --l 1 --n 4..8 --i-max 5 --j-max 6
        spherikit check --which paper-tables --n 0..12
        spherikit check --which recurrence --l 1 --n 0..6 --w-max 10
    """
    try:
        config = SweepConfig(
            which=which,  # type: ignore[arg-type]
            l=l,
            n_values=n_values,
            i_values=tuple(range(i_min, i_max + 1)),
            j_values=tuple(range(j_min, j_max + 1)),
            w_max=w_max,
            workers=workers,
            output_format=output_format,  # type: ignore[arg-type]
            output_path=output,
            enforce_hypotheses=not permissive,
            family_file=family_file,
        )
    except ValidationError as e:
        _fail("; ".join(err["msg"] for err in e.errors()))
        return

    try:
        report = run_sweep(config, on_result=_stream)
    except Exception as e:
        _fail(str(e))
        return

    if output_format == "json" or output:
        _emit_json(report.to_payload(), output)
    if output_format == "text":
        _print_report(report)
    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
