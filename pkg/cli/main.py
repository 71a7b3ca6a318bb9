#!/usr/bin/env python3
"""
starcover CLI
Generate bicolored point sets, cover them with non-crossing 3-stars, check and draw the result

Usage:
    starcover gen --family fig5 --k 4 --out s.json
    starcover cover --strategy driver --in s.json --out c.json
    starcover verify --points s.json --cover c.json
    starcover render --points s.json --cover c.json --svg out.svg
"""

import json
import logging
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence

import click
from pydantic import ValidationError

from starcover.config import settings
from starcover.core.geometry import PointSet
from starcover.core.lines import find_line_through_blue, find_line_with_counts
from starcover.core.partition import Cutting, equitable_subdivision, subdivide_s_s1, verify_subdivision
from starcover.coverings import (
    Covering,
    cover_11_11,
    cover_auto,
    cover_convex_greedy,
    cover_double_chain,
    cover_driver,
    cover_equitable,
    cover_general_t,
    cover_linearly_separable,
    cover_nine,
    decide_convex_full,
    max_cover_convex,
)
from starcover.errors import BudgetExceeded, StarcoverError
from starcover.exporters import growth_exponents, plan, render_svg, run_bench, to_csv, write_svg
from starcover.generators import (
    gen_convex,
    gen_double_chain,
    gen_fig4,
    gen_fig5,
    gen_general_t,
    gen_random,
    gen_separable,
    random_pattern,
    read_double_chain,
    read_point_set,
    write_double_chain,
    write_point_set,
)
from starcover.models import (
    CoveringDocument,
    DoubleChainDocument,
    HalfplaneDoc,
    OracleReport,
    PartitionDocument,
    PointSetDocument,
)
from starcover.oracle import exact_max_cover, validate_covering

logger = logging.getLogger("starcover.cli")

#: Errors reported as a failed command (exit 1) rather than a traceback.
HANDLED = (StarcoverError, ValidationError, OSError, ValueError)

STRATEGIES: Dict[str, Callable[[PointSet], Covering]] = {
    "equitable": cover_equitable,
    "separable": cover_linearly_separable,
    "convex-greedy": cover_convex_greedy,
    "convex-dp": max_cover_convex,
    "general-t": cover_general_t,
    "nine": cover_nine,
    "eleven": cover_11_11,
    "driver": cover_driver,
}


def _fail(ctx: click.Context, error: Exception) -> None:
    click.echo(f"❌ Error: {error}", err=True)
    logger.debug("Command failed", exc_info=error)
    ctx.exit(1)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text)


def _read_covering(path: str) -> Covering:
    return CoveringDocument.model_validate_json(Path(path).read_text()).to_covering()


@click.group()
@click.version_option(settings.app_version, prog_name=settings.app_name)
@click.option('--verbose', '-v', is_flag=True, help='Log at DEBUG level')
def cli(verbose):
    """starcover - non-crossing 3-star coverings of red-blue point sets"""
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level, logging.INFO)
    logging.basicConfig(level=level, format=settings.log_format)


# ----------------------------------------------------------------------
# gen
# ----------------------------------------------------------------------
@cli.command()
@click.option('--family', required=True,
              type=click.Choice(['random', 'separable', 'general-t', 'convex', 'double-chain', 'fig4', 'fig5']))
@click.option('--r', 'r', type=int, help='Red points')
@click.option('--b', 'b', type=int, help='Blue points')
@click.option('--k', type=int, help='k for general-t and fig5')
@click.option('--t', 't', type=int, default=0, help='t for general-t')
@click.option('--pattern', help='Color pattern for convex, e.g. RBRB (random if omitted)')
@click.option('--colors1', help='Colors of the first double chain')
@click.option('--colors2', help='Colors of the second double chain')
@click.option('--seed', type=int, default=0, help='Random seed')
@click.option('--out', type=click.Path(dir_okay=False), help='Output JSON (stdout if omitted)')
@click.pass_context
def gen(ctx, family, r, b, k, t, pattern, colors1, colors2, seed, out):
    """Generate a point set"""
    needs = {
        'random': ('r', 'b'), 'separable': ('r', 'b'), 'fig4': ('r', 'b'),
        'general-t': ('k',), 'fig5': ('k',), 'double-chain': ('colors1', 'colors2'),
    }
    given = {'r': r, 'b': b, 'k': k, 'colors1': colors1, 'colors2': colors2}
    missing = [name for name in needs.get(family, ()) if given[name] is None]
    if family == 'convex' and pattern is None and (r is None or b is None):
        missing.append('pattern (or r and b)')
    if missing:
        raise click.UsageError(f"--family {family} needs {', '.join('--' + m for m in missing)}")

    try:
        if family == 'double-chain':
            dc = gen_double_chain(colors1, colors2, seed)
            if out:
                write_double_chain(dc, Path(out))
            else:
                click.echo(DoubleChainDocument.from_double_chain(dc).model_dump_json(indent=2))
            return
        if family == 'random':
            s = gen_random(r, b, seed)
        elif family == 'separable':
            s = gen_separable(r, b, seed)
        elif family == 'general-t':
            s = gen_general_t(k, t, seed)
        elif family == 'convex':
            s = gen_convex(pattern or random_pattern(r, b, seed))
        elif family == 'fig4':
            s = gen_fig4(r, b)
        else:
            s = gen_fig5(k)
    except HANDLED as e:
        _fail(ctx, e)
        return

    if out:
        write_point_set(s, Path(out))
        click.echo(f"✅ {family}: {s.r} red, {s.b} blue -> {out}", err=True)
    else:
        click.echo(PointSetDocument.from_point_set(s).model_dump_json(indent=2))


# ----------------------------------------------------------------------
# cover
# ----------------------------------------------------------------------
@cli.command()
@click.option('--strategy', default='auto', show_default=True,
              type=click.Choice(['auto', 'double-chain', *STRATEGIES]))
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--out', type=click.Path(dir_okay=False), help='Covering JSON (stdout if omitted)')
@click.option('--svg', 'svg_path', type=click.Path(dir_okay=False), help='Also draw the covering')
@click.pass_context
def cover(ctx, strategy, in_path, out, svg_path):
    """Cover a point set with non-crossing 3-stars"""
    try:
        if strategy == 'double-chain':
            dc = read_double_chain(Path(in_path))
            s = dc.points
            covering = cover_double_chain(dc)
        else:
            s = read_point_set(Path(in_path))
            if strategy == 'auto':
                strategy, covering = cover_auto(s)
            else:
                covering = STRATEGIES[strategy](s)
    except HANDLED as e:
        _fail(ctx, e)
        return

    _emit(CoveringDocument.from_covering(covering, strategy).model_dump_json(indent=2), out)
    if svg_path:
        write_svg(render_svg(s, covering), Path(svg_path))
    click.echo(
        f"✅ {strategy}: {covering.covered} covered, {len(covering.uncovered)} uncovered",
        err=True,
    )


@cli.command('decide-convex')
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--out', type=click.Path(dir_okay=False), help='Witness covering JSON, if one exists')
@click.pass_context
def decide_convex(ctx, in_path, out):
    """Decide whether a convex set can be covered completely (exit 1 if not)"""
    try:
        s = read_point_set(Path(in_path))
        full, witness = decide_convex_full(s)
        best = witness if full else max_cover_convex(s)
    except HANDLED as e:
        _fail(ctx, e)
        return

    click.echo(f"full: {str(full).lower()}")
    click.echo(f"max covered: {best.covered} of {len(s)}")
    if out and witness is not None:
        Path(out).write_text(CoveringDocument.from_covering(witness, 'convex-dp').model_dump_json(indent=2))
    if not full:
        ctx.exit(1)


# ----------------------------------------------------------------------
# partition
# ----------------------------------------------------------------------
def _parse_ratio(ctx, param, value):
    if value is None:
        return None
    try:
        c, d = (int(part) for part in value.split(':'))
    except ValueError:
        raise click.BadParameter("expected c:d, e.g. 3:1") from None
    if c < 0 or d < 0 or c + d == 0:
        raise click.BadParameter("c and d must be non-negative and not both zero")
    return c, d


@cli.command()
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--ratio', callback=_parse_ratio, help='Red:blue points per region, e.g. 3:1')
@click.option('--groups', type=click.IntRange(min=1), help='Number of regions with --ratio')
@click.option('--star', type=click.IntRange(min=1), help='Split into (star+1, star) and (star, star+1) regions')
@click.option('--g', 'g', type=click.IntRange(min=0), help='Number of X regions with --star')
@click.option('--h', 'h', type=click.IntRange(min=0), default=0, help='Number of Y regions with --star')
@click.option('--out', type=click.Path(dir_okay=False), help='Partition JSON (stdout if omitted)')
@click.option('--svg', 'svg_path', type=click.Path(dir_okay=False), help='Also draw the regions')
@click.pass_context
def partition(ctx, in_path, ratio, groups, star, g, h, out, svg_path):
    """Split a point set into convex regions with prescribed color counts"""
    if (ratio is None) == (star is None):
        raise click.UsageError("give either --ratio c:d --groups G or --star S --g G --h H")
    if ratio is not None and groups is None:
        raise click.UsageError("--ratio needs --groups")
    if star is not None and g is None:
        raise click.UsageError("--star needs --g")
    try:
        s = read_point_set(Path(in_path))
        if star is not None:
            regions = subdivide_s_s1(s, star, g, h)
        else:
            regions = equitable_subdivision(s, ratio[0], ratio[1], groups)
    except HANDLED as e:
        _fail(ctx, e)
        return

    problems = verify_subdivision(s, regions)
    _emit(PartitionDocument.from_regions(regions).model_dump_json(indent=2), out)
    if svg_path:
        write_svg(render_svg(s, regions=regions), Path(svg_path))
    for problem in problems:
        click.echo(f"❌ {problem}", err=True)
    if problems:
        ctx.exit(1)
    click.echo(f"✅ {len(regions)} regions", err=True)


# ----------------------------------------------------------------------
# oracle / verify
# ----------------------------------------------------------------------
@cli.command()
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--budget-nodes', type=int, help=f'Node budget (default {settings.budget_nodes})')
@click.option('--budget-secs', type=float, help='Time budget in seconds (env STARCOVER_BUDGET_SECS)')
@click.option('--out', type=click.Path(dir_okay=False), help='Best covering JSON')
@click.option('--json', 'as_json', is_flag=True, help='Print the full report as JSON')
@click.pass_context
def oracle(ctx, in_path, budget_nodes, budget_secs, out, as_json):
    """Compute the largest coverable number of points exactly"""
    try:
        s = read_point_set(Path(in_path))
        try:
            result = exact_max_cover(s, budget_nodes, budget_secs)
        except BudgetExceeded as e:
            click.echo(f"⚠️  {e}; reporting the best covering found", err=True)
            result = e.best
    except HANDLED as e:
        _fail(ctx, e)
        return

    report = OracleReport(
        r=s.r,
        b=s.b,
        covered=result.c_of_s,
        uncovered=result.u_of_s,
        optimal=result.optimal,
        nodes_explored=result.nodes_explored,
        covering=CoveringDocument.from_covering(result.best_covering, 'exact'),
    )
    if out:
        Path(out).write_text(report.covering.model_dump_json(indent=2))
    if as_json:
        click.echo(report.model_dump_json(indent=2))
    else:
        bound = "" if result.optimal else " (budget exceeded, not proven optimal)"
        click.echo(f"𝒞(S)={report.covered}, 𝒰(S)={report.uncovered}{bound}")


@cli.command()
@click.option('--points', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--cover', 'cover_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.pass_context
def verify(ctx, points, cover_path):
    """Check a covering: color pattern, reuse, crossings (exit 1 on any violation)"""
    try:
        s = read_point_set(Path(points))
        report = validate_covering(s, _read_covering(cover_path))
    except HANDLED as e:
        _fail(ctx, e)
        return

    if report.ok:
        click.echo("✅ valid covering")
        return
    for violation in report.violations:
        click.echo(f"❌ {violation.kind.value}: {violation.details}", err=True)
    ctx.exit(1)


# ----------------------------------------------------------------------
# render
# ----------------------------------------------------------------------
@cli.command()
@click.option('--points', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--cover', 'cover_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--partition', 'partition_path', type=click.Path(exists=True, dir_okay=False))
@click.option('--svg', 'svg_path', type=click.Path(dir_okay=False), help='SVG output (stdout if omitted)')
@click.pass_context
def render(ctx, points, cover_path, partition_path, svg_path):
    """Draw a point set with an optional covering and partition"""
    try:
        s = read_point_set(Path(points))
        covering = _read_covering(cover_path) if cover_path else None
        regions = None
        cutting: Optional[Cutting] = None
        if partition_path:
            doc = PartitionDocument.model_validate_json(Path(partition_path).read_text())
            regions = doc.to_regions()
            cutting = doc.cutting.to_cutting() if doc.cutting else None
    except HANDLED as e:
        _fail(ctx, e)
        return

    text = render_svg(s, covering, cutting, regions)
    if svg_path:
        write_svg(text, Path(svg_path))
    else:
        click.echo(text, nl=False)


# ----------------------------------------------------------------------
# bench
# ----------------------------------------------------------------------
@cli.command()
@click.option('--family', 'families', multiple=True,
              type=click.Choice(['separable', 'convex-dp', 'equitable', 'driver']),
              help='Repeatable; all families if omitted')
@click.option('--sizes', help='Comma-separated instance sizes (per-family defaults if omitted)')
@click.option('--seeds', type=int, default=1, show_default=True, help='Instances per size')
@click.option('--workers', type=int, help=f'Process pool size (default {settings.bench_workers})')
@click.option('--out', type=click.Path(dir_okay=False), help='CSV output (stdout if omitted)')
@click.option('--progress/--no-progress', default=False)
@click.pass_context
def bench(ctx, families, sizes, seeds, workers, out, progress):
    """Time the covering strategies on growing instances"""
    try:
        size_list = [int(n) for n in sizes.split(',')] if sizes else None
    except ValueError:
        raise click.UsageError(f"--sizes must be comma-separated integers, got {sizes!r}") from None
    try:
        cases = plan(families or ('separable', 'convex-dp', 'equitable', 'driver'), size_list, seeds)
        rows = run_bench(cases, workers, progress)
    except HANDLED as e:
        _fail(ctx, e)
        return

    _emit(to_csv(rows).rstrip('\n'), out)
    for family, slope in growth_exponents(rows).items():
        click.echo(f"📈 {family}: time ~ n^{slope:.2f}", err=True)


# ----------------------------------------------------------------------
# line-find
# ----------------------------------------------------------------------
@cli.command('line-find')
@click.option('--in', 'in_path', required=True, type=click.Path(exists=True, dir_okay=False))
@click.option('--m', 'm', type=int, required=True, help='Points strictly left (counting the blue point with --through-blue)')
@click.option('--j', 'j', type=int, required=True, help='Blue points strictly left')
@click.option('--through-blue', is_flag=True, help='The line passes through one blue point')
@click.pass_context
def line_find(ctx, in_path, m, j, through_blue):
    """Find a directed line with prescribed left-side counts"""
    try:
        s = read_point_set(Path(in_path))
        if through_blue:
            found = find_line_through_blue(s, m, j)
            line, through = found if found else (None, None)
        else:
            line, through = find_line_with_counts(s, m, j), None
    except HANDLED as e:
        _fail(ctx, e)
        return

    if line is None:
        click.echo(f"❌ no line with m={m}, j={j}", err=True)
        ctx.exit(1)
    payload = {"line": HalfplaneDoc.from_line(line).model_dump(), "through": through}
    click.echo(json.dumps(payload, indent=2))


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI on ``argv`` and return its exit code instead of exiting."""
    args = list(argv) if argv is not None else None
    try:
        # non-standalone click returns the code passed to ctx.exit
        code = cli.main(args=args, prog_name="starcover", standalone_mode=False)
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.exceptions.Abort:
        return 1
    return code if isinstance(code, int) else 0


if __name__ == '__main__':
    cli()
