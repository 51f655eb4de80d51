import os
import sys

# When running this file directly (python cli_parser.py ...), the repository
# root must be on `sys.path` so imports like `geometry.norm_core` resolve.
if __name__ == "__main__" and __package__ is None:
    root = os.path.abspath(os.path.dirname(__file__))
    if root not in sys.path:
        sys.path.insert(0, root)

import click

from geometry.norm_core import parse_norm_spec
from parsers.point_parser import format_plain, format_structured, read_points, write_diagram
from qc.rules import check_report, compare_reports, summary_table
from solvers.elzinga_hearn import solve_eh
from solvers.oracle import solve_descent, solve_enumeration
from solvers.shamos_hoey import solve_sh
from ui.svg_plot import render_svg
from utils.config import SETTINGS
from utils.errors import InternalInconsistency, NormDiskError, NotStrictlyConvex
from utils.instances import uniform_instance
from utils.logging import logger, setup_logger

SOLVERS = {
    "eh": solve_eh,
    "sh": solve_sh,
    "oracle": solve_enumeration,
    "descent": solve_descent,
}
EXACT = ("eh", "sh", "oracle")
AGREEMENT_TOL = 1e-7


def _fail(exc: NormDiskError):
    click.echo(f"Error: {exc}", err=True)
    sys.exit(exc.exit_code)


def _load_points(input_path, generate, seed):
    if input_path and generate is not None:
        raise click.UsageError("Use either --input or --generate, not both")
    if input_path:
        return read_points(input_path)
    if generate is not None:
        return uniform_instance(generate, seed)
    raise click.UsageError("One of --input or --generate is required")


def _run_all(norm, points, tol):
    reports = {name: SOLVERS[name](norm, points, tol) for name in SOLVERS}
    click.echo("=== Solvers ===")
    click.echo(summary_table(list(reports.values())).to_string(index=False))

    table = compare_reports([reports[name] for name in EXACT])
    worst = float(table["radius_rel_error"].max()) if len(table) else 0.0
    click.echo("\n=== Agreement (exact solvers) ===")
    click.echo(table.to_string(index=False))
    click.echo(f"max radius discrepancy {worst:.3g}")
    if worst > AGREEMENT_TOL:
        raise InternalInconsistency(f"Exact solvers disagree on the radius by {worst:.3g}")
    return reports


@click.command()
@click.option("--input", "input_path", type=click.Path(exists=True, dir_okay=False),
              help="Point file: one 'x, y' per line, '#' comments.")
@click.option("--norm", "norm_spec", default="p:2", show_default=True,
              help="Norm as 'p:<value>' with 1 < p < inf.")
@click.option("--algo", type=click.Choice(["eh", "sh", "oracle", "descent", "all"]),
              default="eh", show_default=True)
@click.option("--tol", type=float, default=None, help="Feasibility tolerance (default 1e-9).")
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False), help="Write an SVG plot.")
@click.option("--generate", type=click.IntRange(min=1), default=None,
              help="Use N seeded uniform points in [-1, 1]^2 instead of --input.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "output", type=click.Choice(["plain", "structured"]),
              default="plain", show_default=True)
@click.option("--diagram", "diagram_path", type=click.Path(dir_okay=False),
              help="Write the farthest-point Voronoi diagram as JSON (sh and all).")
@click.option("--verbose", is_flag=True, help="Debug logging.")
def main(input_path, norm_spec, algo, tol, svg_path, generate, seed, output, diagram_path, verbose):
    """Minimal enclosing disk of a planar point set under an l^p norm."""
    if verbose:
        setup_logger("DEBUG")
    tol = SETTINGS["TOL"] if tol is None else tol
    if not tol > 0:
        raise click.BadParameter("must be positive", param_hint="--tol")

    try:
        norm = parse_norm_spec(norm_spec)
    except NotStrictlyConvex as exc:
        _fail(exc)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="--norm")

    try:
        points = _load_points(input_path, generate, seed)
        logger.info("Loaded %d distinct points, norm %s", len(points), norm)
        if algo == "all":
            reports = _run_all(norm, points, tol)
            report = reports["eh"]
        else:
            reports = {algo: SOLVERS[algo](norm, points, tol)}
            report = reports[algo]
    except NormDiskError as exc:
        _fail(exc)

    click.echo(format_structured(report) if output == "structured" else format_plain(report))

    for name, r in reports.items():
        for issue in check_report(norm, points, r, max(tol, 1e-6) if name == "descent" else tol):
            click.echo(f"warning: [{name}] {issue}", err=True)

    if svg_path:
        render_svg(points, report, svg_path)
        logger.info("SVG written to %s", svg_path)
    if diagram_path:
        if "sh" in reports and reports["sh"].diagram is not None:
            write_diagram(reports["sh"].diagram, diagram_path)
        else:
            click.echo("warning: --diagram needs --algo sh or all", err=True)


if __name__ == "__main__":
    main()
