import functools
import os
import sys
from collections import Counter

import click
from pydantic import ValidationError

from exceptions.exceptions import *
from diagram.diagram_format import format_diagram, read_diagram, read_moves, write_diagram, write_moves
from diagram.diagram_validation import DiagramValidation
from managers.bounds_manager import BoundsManager
from managers.demo_manager import DemoManager
from managers.event_manager import EventManager
from managers.invariant_manager import InvariantManager
from managers.move_manager import MoveManager
from managers.search_manager import SearchManager
from managers.sum_manager import SumManager
from models.invariant_report import DeltaZeroClass
from models.search_budget import SearchBudget
from models.sum_point import SumPoint
from models.summand_profile import SummandProfile
from utils.helper_functions import format_number, format_path, is_half_integer, parse_number
from utils.logger import ErrorLogger, TraceLogger

DEFAULT_SEARCH_CONFIGURATION = format_path(os.path.join(os.path.dirname(__file__), "..", "misc",
                                                        "search_configurations", "default_search_configuration.json"))


def guarded(command):
    """Map engine errors to exit 1 and parse errors to exit 2; log anything else."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except DiagramParseException as e:
            ErrorLogger.log_error(e)
            sys.exit(2)
        except VPBridgeException as e:
            ErrorLogger.log_error(e)
            sys.exit(1)
        except ValidationError as e:
            raise click.UsageError(str(e))
        except click.ClickException:
            raise
        except Exception as e:
            ErrorLogger.log_error(e)
            raise
    return wrapper


def half_integer(ctx, param, value):
    try:
        number = parse_number(value)
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"'{value}' is not a number")
    if not is_half_integer(number):
        raise click.BadParameter(f"{value} is not a half-integer")
    return number


def emit(lines):
    for line in lines:
        click.echo(line)


def event_manager(ctx: click.Context) -> EventManager:
    return ctx.obj["events"]


@click.group(name="vpbridge")
@click.option("--quiet", is_flag=True, help="Only print results.")
@click.option("--trace", is_flag=True, help="Print every engine step with its invariants.")
@click.option("--log-file", type=click.Path(dir_okay=False), default=None, help="Append error tracebacks here.")
@click.pass_context
def cli(ctx, quiet, trace, log_file):
    """Combinatorial engine for multiple v.p.-bridge surfaces."""
    TraceLogger.configure(trace=trace, quiet=quiet)
    ErrorLogger.configure(log_path=log_file)
    events = EventManager()
    if trace:
        events.add_listener(lambda event: TraceLogger.trace(event.description))
    ctx.obj = {"events": events}


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@guarded
def validate(path):
    """Check every invariant of a diagram file."""
    report = DiagramValidation.validate_diagram(read_diagram(path))
    if report.is_valid:
        click.echo("valid")
        return
    click.echo(f"invalid: {report.first().message}")
    TraceLogger.info(f"{len(report.violations)} violations")
    for line in report.lines()[1:]:
        TraceLogger.trace(line)
    sys.exit(1)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--check-identities", is_flag=True, help="Evaluate the global identities; exit 1 if one fails.")
@click.option("--nonnegativity", is_flag=True, help="Evaluate the lower bound on netext and its equality case.")
@click.option("--lint", is_flag=True, help="Check the necessary conditions for local thinness.")
@guarded
def invariants(path, check_identities, nonnegativity, lint):
    """Print netext, width, netchi and the extent difference of every body."""
    diagram = read_diagram(path)
    report = InvariantManager.invariants(diagram)
    if check_identities:
        report.identity_checks = InvariantManager.check_identities(diagram)
    emit(report.lines())
    lint_report = MoveManager.locally_thin_lint(diagram) if nonnegativity or lint else None
    if nonnegativity:
        result = InvariantManager.nonnegativity_bound(diagram)
        click.echo(f"nonnegativity bound={format_number(result.bound)} holds={'yes' if result.satisfied else 'no'}")
        if result.width_checked:
            click.echo(f"width_at_least_netext holds={'yes' if result.width_satisfied else 'no'}")
        emit(InvariantManager.equality_check(diagram, lint_report).lines())
    if lint:
        emit(lint_report.lines())
    if check_identities and not report.identities_hold:
        sys.exit(1)


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.argument("moves_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--thinning", is_flag=True, help="Expand every untelescope into an elementary thinning.")
@click.option("--width/--no-width", "track_width", default=None, help="Force width tracking on or off.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the result here.")
@click.pass_context
@guarded
def apply(ctx, path, moves_path, thinning, track_width, out):
    """Apply a move script to a diagram."""
    diagram = read_diagram(path)
    moves = read_moves(moves_path)
    manager = MoveManager(event_manager(ctx), track_width=track_width)
    if thinning:
        diagram, applied = manager.extended_thinning_steps(diagram, moves)
    else:
        for move in moves:
            diagram = manager.apply_move(diagram, move)
        applied = moves
    TraceLogger.info(f"applied {len(applied)} moves")
    if out is None:
        click.echo(format_diagram(diagram), nl=False)
    else:
        write_diagram(diagram, out)
        emit(InvariantManager.invariants(diagram).lines()[:3])


@cli.command()
@click.argument("path1", type=click.Path(exists=True, dir_okay=False))
@click.argument("point1")
@click.argument("path2", type=click.Path(exists=True, dir_okay=False))
@click.argument("point2")
@click.option("--kind", type=click.IntRange(2, 3), default=2, help="Punctures of the summing sphere.")
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the sum here.")
@click.pass_context
@guarded
def glue(ctx, path1, point1, path2, point2, kind, out):
    """Sum two diagrams at points given as BODY or BODY:CUT."""
    manager = SumManager(event_manager(ctx))
    whole = manager.glue(read_diagram(path1), SumPoint.parse(point1, kind, 1),
                         read_diagram(path2), SumPoint.parse(point2, kind, 2))
    if out is None:
        click.echo(format_diagram(whole), nl=False)
    else:
        write_diagram(whole, out)
        emit(InvariantManager.invariants(whole).lines()[:3])


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--out-dir", type=click.Path(file_okay=False), default=None, help="Write each factor here.")
@click.pass_context
@guarded
def factor(ctx, path, out_dir):
    """Split a diagram into prime factors along thin summing spheres."""
    diagram = read_diagram(path)
    manager = SumManager(event_manager(ctx))
    result = manager.split_prime(diagram)
    click.echo(result.summary_line())
    for k, part in enumerate(result.factors):
        report = InvariantManager.invariants(part)
        click.echo(f"factor {k} netext={format_number(report.netext)} width={format_number(report.width)} "
                   f"netchi={format_number(report.netchi)}")
        if out_dir is not None:
            os.makedirs(out_dir, exist_ok=True)
            write_diagram(part, os.path.join(out_dir, f"factor_{k}.diag"))
    for a, b, data in sorted(result.dual_tree.edges(data=True)):
        click.echo(f"edge {a} {b} sphere={data['sphere']} kind={data['kind']}")
    emit(check.line() for check in manager.additivity_check(result.factors, diagram, result.p2, result.p3))


@cli.group()
def bounds():
    """Closed-form bounds on classical invariants of composite knots."""


@bounds.command()
@click.option("--n", type=int, required=True, help="Number of prime summands.")
@click.option("--j", type=int, default=0, help="Number of m-small summands, listed first.")
@click.option("--t", "tunnel_numbers", type=int, multiple=True, required=True, help="Tunnel number of a summand.")
@guarded
def tunnel(n, j, tunnel_numbers):
    """Bounds on the tunnel number of a sum."""
    lower, upper = BoundsManager.tunnel_bounds(SummandProfile(n=n, j=j, tunnel_numbers=list(tunnel_numbers)))
    click.echo(f"lower={lower} upper={upper}")


@bounds.command()
@click.option("--g", "genus", type=int, required=True)
@click.option("--b", "bridges", type=int, required=True)
@guarded
def morimoto(genus, bridges):
    """Summand counts for a knot with a (g, b)-decomposition."""
    most, min_11, min_2bridge = BoundsManager.morimoto_bounds(genus, bridges)
    click.echo(f"max={most} min11={min_11} min2bridge={min_2bridge}")


@bounds.command()
@click.option("--g", "genus", type=int, required=True)
@click.option("--bg", "bridge_number", type=int, required=True, help="Genus-g bridge number of the sum.")
@click.option("--part", "parts", multiple=True, required=True, help="g_i,b_i of a summand.")
@click.option("--tunnel-flag", "tunnel_flags", type=bool, multiple=True, help="Whether t(K_i) >= g_i, per summand.")
@guarded
def superadditivity(genus, bridge_number, parts, tunnel_flags):
    """Check superadditivity of genus-g bridge number."""
    try:
        pairs = [tuple(int(value) for value in part.split(",")) for part in parts]
    except ValueError:
        raise click.BadParameter("parts are written g,b", param_hint="--part")
    checks = BoundsManager.bridge_superadditivity_check(genus, bridge_number, pairs, list(tunnel_flags) or None)
    emit(check.line() for check in checks)


@bounds.command()
@click.option("--netext", required=True, callback=half_integer, help="Net extent of a certificate, e.g. 3 or 5/2.")
@guarded
def schubert(netext):
    """Most prime summands of a knot with a certificate of this net extent."""
    click.echo(f"max_summands={BoundsManager.schubert_bound(netext)}")


@cli.command()
@click.argument("path", type=click.Path(exists=True, dir_okay=False))
@click.option("--config", type=click.Path(exists=True, dir_okay=False), default=DEFAULT_SEARCH_CONFIGURATION)
@click.option("--depth", type=int, default=None)
@click.option("--chi-cap", type=int, default=None, help="Cap x on netchi.")
@click.option("--max-diagrams", type=int, default=None)
@click.option("--beam", "beam_width", type=int, default=None)
@click.option("--width", "width_tracking", is_flag=True, default=None, help="Track width monotonicity.")
@click.option("--parallel", is_flag=True, default=None)
@click.option("--workers", "num_workers", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Prefix of the .diag and .moves outputs.")
@click.pass_context
@guarded
def search(ctx, path, config, depth, chi_cap, max_diagrams, beam_width, width_tracking, parallel, num_workers, out):
    """Search move scripts for smaller netext and width; results are upper bounds."""
    diagram = read_diagram(path)
    budget = SearchBudget.from_json(config, max_depth=depth, netchi_cap=chi_cap, max_diagrams=max_diagrams,
                                    beam_width=beam_width, width_tracking=width_tracking, parallel=parallel,
                                    num_workers=num_workers, heegaard_genus_bound=diagram.meta.heegaard_genus_bound)
    result = SearchManager(event_manager(ctx)).minimize(diagram, budget)
    if out is not None:
        write_diagram(result.best, f"{out}.diag")
        write_moves(result.script, f"{out}.moves")
        TraceLogger.info(f"wrote {out}.diag and {out}.moves")
    emit(result.lines())


@cli.command(name="enumerate")
@click.option("--genus", type=int, default=2)
@click.option("--punctures", type=int, default=6)
@click.option("--minus", type=int, default=3)
@guarded
def enumerate_command(genus, punctures, minus):
    """Enumerate small bodies and cross-check the extent difference classifier."""
    found = SearchManager.enumerate_bodies((genus, punctures, minus))
    negative = zero = mismatched = 0
    classes = Counter()
    for entry in found:
        delta = InvariantManager.delta(entry.body, entry.surfaces)
        if delta < 0:
            negative += 1
        if delta != 0:
            continue
        zero += 1
        label = InvariantManager.classify_delta_zero(entry.body, entry.surfaces)
        classes[label] += 1
        mismatched += label != entry.witness_class
    click.echo(f"bodies={len(found)} realizable={sum(entry.realizable for entry in found)}")
    click.echo(f"negative_delta={negative} delta_zero={zero} mismatched={mismatched}")
    for label in DeltaZeroClass:
        click.echo(f"class {label.value}={classes[label]}")


@cli.command()
@click.argument("name", default="all")
@guarded
def demo(name):
    """Reproduce worked examples; prints PASS or FAIL per case."""
    lines = DemoManager().run(name)
    emit(lines)
    if not DemoManager.passed(lines):
        sys.exit(1)


def main():
    cli(prog_name="vpbridge")


if __name__ == "__main__":
    main()
