"""
octoverify CLI Entry Point

Command-line interface for the verification suites, the rendered tables and
one-off decompositions and branchings.
"""

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence, Tuple

import click
from loguru import logger
from rich.console import Console
from rich.table import Table

from . import __version__
from .checks import SUITES
from .config_manager import REPORT_FORMATS, ConfigManager
from .error_handling import (
    ErrorContext,
    OctoverifyError,
    UsageError,
    error_handler,
)
from .exact_core import to_vector
from .rendering import render_decomposition, render_table
from .report import Report, default_report_path, run_verify
from .root_rep_engine.branching import branch_character, default_projection, get_projection
from .root_rep_engine.characters import VirtualRep, alt_power, decompose, irreducible_from_coords
from .root_rep_engine.root_system import RootSystem, build_root_system

console = Console(stderr=True)

LOG_FORMAT = ("<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
              "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>")

PRESETS = ("spinor16", "vector", "spinor", "cospinor", "adjoint")

_HALF = Fraction(1, 2)


def _exit_with(error: BaseException, operation: str):
    """Report an error and leave with its exit code."""
    error_handler.handle_error(error, ErrorContext(operation=operation, component="cli"))
    code = error_handler.exit_code_for(error)
    token = getattr(error, "token", None)
    suffix = f" (offending token: {token!r})" if token else ""
    console.print(f"[bold red]Error:[/bold red] {error}{suffix}")
    sys.exit(code)


def parse_algebra(label: str) -> RootSystem:
    try:
        return build_root_system(label.strip())
    except OctoverifyError as e:
        raise UsageError(f"Cannot parse algebra '{label}': {e}", token=label) from e


def _preset_coords(rs: RootSystem, preset: str) -> Tuple[Fraction, ...]:
    n = rs.ambient_dim
    if preset == "spinor16":
        if rs.label != "D5":
            raise UsageError(f"Preset spinor16 is the D5 spinor, not a {rs.label} weight", token=preset)
        return (_HALF,) * 5
    if preset == "vector":
        if rs.type_label not in "ABCD":
            raise UsageError(f"No vector preset for {rs.label}", token=preset)
        return (Fraction(1),) + (Fraction(0),) * (n - 1)
    if preset in ("spinor", "cospinor"):
        if rs.type_label not in "BD" or (preset == "cospinor" and rs.type_label != "D"):
            raise UsageError(f"No {preset} preset for {rs.label}", token=preset)
        coords = (_HALF,) * n
        return coords[:-1] + (-_HALF,) if preset == "cospinor" else coords
    if preset == "adjoint":
        highest = max(zip(rs.positive_root_coefficients, rs.positive_roots), key=lambda p: sum(p[0]))
        return tuple(highest[1])
    raise UsageError(f"Unknown preset '{preset}'", token=preset)


def parse_weight(rs: RootSystem, text: str) -> VirtualRep:
    """A preset name or comma-separated orthogonal coordinates such as 1/2,1/2,1/2,1/2."""
    text = text.strip()
    if text in PRESETS:
        coords: Sequence[Fraction] = _preset_coords(rs, text)
    else:
        tokens = [t for t in text.split(",") if t.strip()]
        try:
            coords = to_vector(tokens)
        except OctoverifyError:
            bad = next(t for t in tokens if not _is_scalar(t))
            raise UsageError(f"Cannot parse weight coordinate '{bad.strip()}'", token=bad.strip()) from None
        if len(coords) != rs.ambient_dim:
            raise UsageError(
                f"{rs.label} weights have {rs.ambient_dim} coordinates, got {len(coords)}", token=text
            )
    try:
        return irreducible_from_coords(rs, coords)
    except OctoverifyError as e:
        raise UsageError(f"Weight '{text}' is not a highest weight of {rs.label}: {e}", token=text) from e


def _is_scalar(token: str) -> bool:
    try:
        Fraction(token.strip())
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _emit(rep: VirtualRep, title: str, output_format: str):
    if output_format == "json":
        payload = rep.to_json()
        payload["dimension"] = rep.dimension
        payload["describe"] = rep.describe()
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(render_decomposition(title, rep), nl=False)


def _display_summary(report: Report):
    table = Table(title=f"Verification summary ({report.suite})")
    table.add_column("Suite", style="cyan")
    table.add_column("Pass", style="green")
    table.add_column("Fail", style="red")
    table.add_column("Flagged", style="yellow")
    for suite, counts in report.suite_summaries().items():
        table.add_row(suite, str(counts["pass"]), str(counts["fail"]), str(counts["flagged"]))
    console.print(table)


@click.group()
@click.version_option(__version__, prog_name="octoverify")
@click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
@click.option('--debug', is_flag=True, help='Enable debug logging')
@click.option('--log-file', type=click.Path(dir_okay=False), help='Also write DEBUG logs to this file')
@click.pass_context
def cli(ctx, verbose: bool, debug: bool, log_file: Optional[str]):
    """octoverify - exact checks of octonion, spinor and exceptional-group identities"""

    ctx.ensure_object(dict)

    log_level = "DEBUG" if debug else "INFO" if verbose else "WARNING"
    logger.remove()
    logger.add(sys.stderr, level=log_level, format=LOG_FORMAT)
    if log_file:
        logger.add(log_file, level="DEBUG", format=LOG_FORMAT, rotation="10 MB", retention="7 days")

    ctx.obj['verbose'] = verbose
    ctx.obj['debug'] = debug
    ctx.obj['log_level'] = log_level


@cli.command()
@click.option('--suite', '-s', default='all', show_default=True,
              help=f"Suite to run: all, {', '.join(SUITES)}")
@click.option('--format', 'output_format', type=click.Choice(['json', 'md']), default=None,
              help='Report format (default: the --out suffix, else json)')
@click.option('--out', '-o', type=click.Path(dir_okay=False), help='Write the report to this file')
@click.option('--jobs', '-j', type=click.IntRange(min=1), default=None,
              help='Parallel workers (default: 1)')
@click.pass_context
def verify(ctx, suite: str, output_format: Optional[str], out: Optional[str], jobs: Optional[int]):
    """
    Run verification suites and emit a report.

    Exits 0 when nothing fails, 1 when a check fails.
    """
    try:
        config = ConfigManager(overrides={
            'log_level': ctx.obj.get('log_level'),
            'jobs': jobs,
            'report_format': output_format,
        })
        suffix = Path(out).suffix.lstrip('.') if out else ''
        if output_format is None and suffix in REPORT_FORMATS:
            config.set('report_format', suffix)
        report = run_verify(suite, jobs=config.get('jobs'))
    except OctoverifyError as e:
        _exit_with(e, "verify")
        return

    report_format = config.get('report_format')
    for name, counts in report.suite_summaries().items():
        console.print(f"{name}: {counts['pass']} pass, {counts['fail']} fail, {counts['flagged']} flagged")
    _display_summary(report)

    for result in report.failures():
        console.print(f"[red]FAIL[/red] {result.check_id} ({result.location}): "
                      f"expected {result.expected}, got {result.actual}")
    for result in report.flagged():
        console.print(f"[yellow]FLAGGED[/yellow] {result.check_id} ({result.location}): "
                      f"quoted {result.expected}, computed {result.actual}")

    if out:
        path = report.write(Path(out), report_format)
        console.print(f"Report written to {path}")
    elif config.get('output_directory_set'):
        path = report.write(default_report_path(config.get('output_directory'), report.suite,
                                                report_format), report_format)
        console.print(f"Report written to {path}")
    else:
        click.echo(report.render(report_format), nl=False)

    sys.exit(report.exit_code)


@cli.command()
@click.argument('name')
@click.option('--algebra', '-a', help='Root system label for the spheres table, e.g. B3')
def table(name: str, algebra: Optional[str]):
    """
    Render a table: magic-square, sugra-triplet, table35 or spheres.
    """
    try:
        if algebra:
            parse_algebra(algebra)
        click.echo(render_table(name, algebra), nl=False)
    except OctoverifyError as e:
        _exit_with(e, "table")


@cli.command('decompose')
@click.argument('algebra')
@click.argument('weight_or_preset')
@click.option('--power', '-k', type=int, help='Exterior power to take first')
@click.option('--branch-to', help='Target root system for a preset projection, e.g. B4')
@click.option('--format', 'output_format', type=click.Choice(['json', 'md']), default='md',
              show_default=True)
def decompose_cmd(algebra: str, weight_or_preset: str, power: Optional[int],
                  branch_to: Optional[str], output_format: str):
    """
    Decompose an irreducible (or its exterior power) into irreducibles.

    WEIGHT_OR_PRESET is a preset (spinor16, vector, spinor, cospinor, adjoint)
    or comma-separated orthogonal coordinates such as 1/2,1/2,1/2,1/2,1/2.
    """
    try:
        rs = parse_algebra(algebra)
        rep = parse_weight(rs, weight_or_preset)
        character = rep.character()
        title = f"{rs.label} {weight_or_preset}"
        if power is not None:
            if not 0 <= power <= rep.dimension:
                raise UsageError(
                    f"Exterior power must lie in 0..{rep.dimension}, got {power}", token=str(power)
                )
            character = alt_power(character, power)
            title = f"Exterior power {power} of {title}"
        if branch_to:
            target = parse_algebra(branch_to)
            try:
                projection = default_projection(rs.label, target.label)
            except OctoverifyError as e:
                raise UsageError(str(e), token=branch_to) from e
            result = branch_character(character, target, projection)
            title = f"{title} restricted to {target.label}"
        else:
            result = decompose(character)
        _emit(result, title, output_format)
    except OctoverifyError as e:
        _exit_with(e, "decompose")


@cli.command('branch')
@click.argument('algebra')
@click.argument('weight_or_preset')
@click.argument('target')
@click.option('--projection', '-p', help='Projection preset, e.g. D8->B4 (default: ALGEBRA->TARGET)')
@click.option('--format', 'output_format', type=click.Choice(['json', 'md']), default='md',
              show_default=True)
def branch_cmd(algebra: str, weight_or_preset: str, target: str, projection: Optional[str],
               output_format: str):
    """
    Branch one irreducible of ALGEBRA to TARGET along a projection preset.
    """
    try:
        rs = parse_algebra(algebra)
        target_rs = parse_algebra(target)
        rep = parse_weight(rs, weight_or_preset)
        try:
            chosen = get_projection(projection) if projection else default_projection(rs.label, target_rs.label)
        except OctoverifyError as e:
            raise UsageError(str(e), token=projection or target) from e
        if (chosen.source, chosen.target) != (rs.label, target_rs.label):
            raise UsageError(
                f"Projection {chosen.name} maps {chosen.source} to {chosen.target}, "
                f"not {rs.label} to {target_rs.label}",
                token=chosen.name,
            )
        result = branch_character(rep.character(), target_rs, chosen)
        _emit(result, f"{rs.label} {weight_or_preset} restricted to {target_rs.label}", output_format)
    except OctoverifyError as e:
        _exit_with(e, "branch")


def main():
    cli(obj={})


if __name__ == '__main__':
    main()
