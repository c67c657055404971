from math import factorial
from typing import Any, Dict, List

import click
import numpy as np

from cli.documents import (
    document_kind,
    emit,
    parse_any,
    read_correlation,
    read_document,
    read_functional,
    read_rep,
    read_state_rep,
)
from constructions import approximate_weights, embed_factorial, plan_blocks, rational_combination
from corners import corner, lift_local, lift_max_ent, lift_nonsignalling
from dilation import dilate_commuting_rational, eval_almost_max_ent, round_to_rational_spectrum
from log_engine.log import logger
from maxent import settings
from membership import bell_value, chsh_functional, chsh_optimal_rep, classical_value, is_local
from operators import (
    eval_max_ent,
    eval_state_rep,
    is_maximally_entangled,
    random_max_ent_rep,
    random_pvm,
    schmidt_decompose,
    validate_measure,
    validate_rep,
)
from tensors import (
    is_nonsignalling,
    is_symmetric,
    is_synchronous,
    marginals,
    random_correlation,
    random_nonsignalling,
    sup_distance,
    validate_correlation,
)
from utils import fraction_to_string, is_in_debug_mode, lcm, make_rng, pairs_to_vector, parse_fraction, require_keys
from utils.errors import CorrelationException, MalformedInput, ScenarioMismatch
from utils.types import DilationStrategy, ExitCode, OutputFormat, VerdictStatus


class WorkbenchGroup(click.Group):
    """Maps library exceptions onto exit codes, debug mode lets them through"""

    def invoke(self, ctx: click.Context) -> Any:
        try:
            return super().invoke(ctx)
        except MalformedInput as exc:
            if is_in_debug_mode():
                raise
            logger.error(exc)
            ctx.exit(ExitCode.Usage)
        except CorrelationException as exc:
            if is_in_debug_mode():
                raise
            logger.error(exc)
            ctx.exit(ExitCode.Negative)


input_argument = click.argument("source", type=click.File("r"), default="-")
tol_option = click.option("--tol", type=float, default=None,
                          help="Tolerance, settings default when omitted, also loosens normalization")
seed_option = click.option("--seed", type=int, default=settings.DEFAULT_SEED, show_default=True)
max_den_option = click.option("--max-den", type=click.IntRange(min=1), default=settings.MAX_DEN, show_default=True)
max_dim_option = click.option("--max-dim", type=click.IntRange(min=1), default=settings.MAX_DIM, show_default=True)


def _output(ctx: click.Context, data: Dict[str, Any]) -> None:
    emit(data, ctx.obj["output"])


def _finish(ctx: click.Context, data: Dict[str, Any], positive: bool) -> None:
    _output(ctx, data)
    if not positive:
        ctx.exit(ExitCode.Negative)


@click.group(cls=WorkbenchGroup)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the JSON document to a file")
@click.option("--format", "output_format", type=click.Choice([OutputFormat.Json]), default=OutputFormat.Json)
@click.pass_context
def main(ctx: click.Context, output: str, output_format: str) -> None:
    """Correlation sets of maximally entangled states, one JSON document per command"""
    ctx.ensure_object(dict)
    ctx.obj["output"] = output
    ctx.obj["format"] = output_format


@main.command()
@input_argument
@tol_option
@click.pass_context
def validate(ctx: click.Context, source, tol: float) -> None:
    """Validity report of a correlation, measure or rep"""
    data = read_document(source)
    kind = document_kind(data)
    value = parse_any(data)
    if kind == "correlation":
        report = validate_correlation(value, tol)
    elif kind == "measure":
        report = validate_measure(value, tol)
    elif kind in ("rep", "state"):
        report = validate_rep(value, tol)
    else:
        raise MalformedInput(f"validate does not accept a {kind} document")
    _finish(ctx, {"kind": kind, **report.json()}, report.ok)


@main.command(name="marginals")
@input_argument
@tol_option
@click.pass_context
def marginals_command(ctx: click.Context, source, tol: float) -> None:
    """Marginals of both parties and the largest signalling defect"""
    _output(ctx, marginals(read_correlation(source), tol).json())


@main.group(name="eval")
def eval_group() -> None:
    """Correlation of a representation"""


@eval_group.command(name="max-ent")
@input_argument
@click.pass_context
def eval_max_ent_command(ctx: click.Context, source) -> None:
    _output(ctx, eval_max_ent(read_rep(source)).json())


@eval_group.command(name="state")
@input_argument
@click.pass_context
def eval_state_command(ctx: click.Context, source) -> None:
    _output(ctx, eval_state_rep(read_state_rep(source)).json())


@eval_group.command(name="povm")
@input_argument
@click.pass_context
def eval_povm_command(ctx: click.Context, source) -> None:
    _output(ctx, eval_almost_max_ent(read_rep(source)).json())


@main.command()
@click.argument("sources", type=click.File("r"), nargs=-1, required=True)
@click.option("--weight", "weights", multiple=True, required=True, help="Exact weight such as 1/3, once per rep")
@max_dim_option
@click.pass_context
def combine(ctx: click.Context, sources, weights, max_dim: int) -> None:
    """Direct sum realizing the weighted mix of the reps' correlations"""
    reps = [read_rep(source) for source in sources]
    _output(ctx, rational_combination(reps, [parse_fraction(w) for w in weights], max_dim).json())


@main.command(name="approx-weights")
@click.option("--target", "targets", type=float, multiple=True, required=True)
@click.option("--eps", type=float, required=True)
@max_den_option
@click.pass_context
def approx_weights(ctx: click.Context, targets, eps: float, max_den: int) -> None:
    """Exact weights within eps / N of each real target"""
    weights = approximate_weights(list(targets), eps, max_den)
    _output(ctx, {
        "weights": [fraction_to_string(w) for w in weights],
        "denominator": lcm(*(w.denominator for w in weights)),
        "max_error": max(abs(float(w) - t) for w, t in zip(weights, targets)),
    })


@main.command()
@input_argument
@click.option("--copies", type=click.IntRange(min=1), default=None,
              help="Multiplicity k, defaults to (d - 1)! reaching d!")
@max_dim_option
@click.pass_context
def embed(ctx: click.Context, source, copies: int, max_dim: int) -> None:
    """Same correlation at dimension d * k"""
    rep = read_rep(source)
    k = factorial(rep.d - 1) if copies is None else copies
    _output(ctx, embed_factorial(rep, k, max_dim).json())


@main.command(name="corner")
@input_argument
@click.option("--n-alice", type=click.IntRange(min=1), required=True)
@click.option("--n-bob", type=click.IntRange(min=1), required=True)
@click.pass_context
def corner_command(ctx: click.Context, source, n_alice: int, n_bob: int) -> None:
    """Upper right block of a correlation with n_alice + n_bob inputs per party"""
    _output(ctx, corner(read_correlation(source), n_alice, n_bob).json())


@main.group()
def lift() -> None:
    """Synchronous correlations whose corner is the input"""


@lift.command(name="max-ent")
@input_argument
@click.pass_context
def lift_max_ent_command(ctx: click.Context, source) -> None:
    _output(ctx, lift_max_ent(read_rep(source)).json())


@lift.command(name="nonsignalling")
@input_argument
@tol_option
@click.pass_context
def lift_nonsignalling_command(ctx: click.Context, source, tol: float) -> None:
    _output(ctx, lift_nonsignalling(read_correlation(source), tol).json())


@lift.command(name="local")
@input_argument
@tol_option
@click.pass_context
def lift_local_command(ctx: click.Context, source, tol: float) -> None:
    _output(ctx, lift_local(read_correlation(source), tol).json())


@main.command()
@input_argument
@max_den_option
@max_dim_option
@seed_option
@click.option("--strategy", type=click.Choice([DilationStrategy.Sequential, DilationStrategy.Shared]),
              default=DilationStrategy.Sequential, show_default=True)
@click.pass_context
def dilate(ctx: click.Context, source, max_den: int, max_dim: int, seed: int, strategy: str) -> None:
    """Projective rep reproducing a rep of commuting rational-spectrum POVMs"""
    _output(ctx, dilate_commuting_rational(read_rep(source), max_den, max_dim, seed, strategy).json())


@main.command(name="round-spectrum")
@input_argument
@click.option("--eps", type=float, required=True)
@max_den_option
@seed_option
@click.option("--common-denominator", is_flag=True, help="One grid 1/q shared by every measure")
@click.pass_context
def round_spectrum(ctx: click.Context, source, eps: float, max_den: int, seed: int, common_denominator: bool) -> None:
    """POVM rep with rational spectra within eps of the input"""
    _output(ctx, round_to_rational_spectrum(read_rep(source), eps, max_den, seed, common_denominator).json())


@main.command()
@input_argument
@tol_option
@click.option("--max-vertices", type=click.IntRange(min=1), default=settings.MAX_VERTICES, show_default=True)
@click.pass_context
def membership(ctx: click.Context, source, tol: float, max_vertices: int) -> None:
    """Local polytope verdict, exit 1 when outside and 3 when indeterminate"""
    verdict = is_local(read_correlation(source), tol, max_vertices)
    _output(ctx, verdict.json())
    if verdict.status == VerdictStatus.Outside:
        ctx.exit(ExitCode.Negative)
    if verdict.status == VerdictStatus.Indeterminate:
        ctx.exit(ExitCode.Indeterminate)


@main.group()
def random() -> None:
    """Seeded random objects"""


@random.command(name="pvm")
@click.option("--d", "d", type=click.IntRange(min=1), required=True)
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--ranks", default=None, help="Comma separated ranks summing to d, random when omitted")
@seed_option
@click.pass_context
def random_pvm_command(ctx: click.Context, d: int, m: int, ranks: str, seed: int) -> None:
    if ranks is None:
        chosen = [int(rank) for rank in make_rng(seed, 1).multinomial(d, np.ones(m) / m)]
    else:
        try:
            chosen = [int(rank) for rank in ranks.split(",")]
        except ValueError:
            raise MalformedInput(f"ranks must be comma separated integers, received {ranks!r}")
    _output(ctx, random_pvm(d, m, chosen, seed).json())


@random.command(name="rep")
@click.option("--n-a", type=click.IntRange(min=1), required=True)
@click.option("--n-b", type=click.IntRange(min=1), required=True)
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--d", "d", type=click.IntRange(min=1), required=True)
@seed_option
@click.pass_context
def random_rep_command(ctx: click.Context, n_a: int, n_b: int, m: int, d: int, seed: int) -> None:
    _output(ctx, random_max_ent_rep(n_a, n_b, m, d, seed).json())


@random.command(name="correlation")
@click.option("--n-a", type=click.IntRange(min=1), required=True)
@click.option("--n-b", type=click.IntRange(min=1), required=True)
@click.option("--m", "m", type=click.IntRange(min=1), required=True)
@click.option("--nonsignalling", is_flag=True, help="Mixture of deterministic correlations instead of free rows")
@seed_option
@click.pass_context
def random_correlation_command(ctx: click.Context, n_a: int, n_b: int, m: int, nonsignalling: bool, seed: int) -> None:
    rng = make_rng(seed)
    p = random_nonsignalling(n_a, n_b, m, rng) if nonsignalling else random_correlation(n_a, n_b, m, rng)
    _output(ctx, p.json())


@main.command()
@click.pass_context
def chsh(ctx: click.Context) -> None:
    """Optimal qubit strategy for CHSH with its quantum and classical values"""
    rep = chsh_optimal_rep()
    functional = chsh_functional()
    p = eval_max_ent(rep)
    _output(ctx, {
        "value": bell_value(p, functional),
        "classical_value": classical_value(functional),
        "functional": functional.json(),
        "rep": rep.json(),
        "correlation": p.json(),
    })


@main.command()
@input_argument
@click.option("--functional", "functional_source", type=click.File("r"), default=None,
              help="Bell functional document, CHSH when omitted")
@click.option("--max-vertices", type=click.IntRange(min=1), default=settings.MAX_VERTICES, show_default=True)
@click.pass_context
def bell(ctx: click.Context, source, functional_source, max_vertices: int) -> None:
    """Value of a Bell functional on a correlation next to its classical maximum"""
    p = read_correlation(source)
    functional = chsh_functional() if functional_source is None else read_functional(functional_source)
    _output(ctx, {"value": bell_value(p, functional), "classical_value": classical_value(functional, max_vertices)})


@main.command()
@click.argument("first", type=click.File("r"))
@click.argument("second", type=click.File("r"))
@click.pass_context
def distance(ctx: click.Context, first, second) -> None:
    """Largest entrywise difference of two correlations"""
    _output(ctx, {"sup_distance": sup_distance(read_correlation(first), read_correlation(second))})


@main.command()
@click.option("--dim", "dims", type=click.IntRange(min=1), multiple=True, required=True)
@click.option("--weight", "weights", multiple=True, required=True)
@max_dim_option
@click.pass_context
def plan(ctx: click.Context, dims, weights, max_dim: int) -> None:
    """Block layout of a rational combination without building it"""
    _output(ctx, plan_blocks(list(dims), [parse_fraction(w) for w in weights], max_dim).json())


@main.command()
@input_argument
@tol_option
@click.pass_context
def schmidt(ctx: click.Context, source, tol: float) -> None:
    """Schmidt form of a state given as {"d_a", "d_b", "state"}"""
    data = read_document(source)
    require_keys(data, ("d_a", "d_b", "state"), "state document")
    try:
        d_a, d_b = int(data["d_a"]), int(data["d_b"])
    except (ValueError, TypeError) as exc:
        raise MalformedInput(f"state dimensions are not integers: {exc}")
    state = pairs_to_vector(data["state"])
    form = schmidt_decompose(state, d_a, d_b)
    _output(ctx, {**form.json(), "maximally_entangled": is_maximally_entangled(state, d_a, d_b, tol)})


@main.command()
@input_argument
@tol_option
@click.pass_context
def predicates(ctx: click.Context, source, tol: float) -> None:
    """Validity, nonsignalling, synchronous and symmetric checks of one correlation"""
    p = read_correlation(source)
    nonsignalling, defect = is_nonsignalling(p, tol)
    report: Dict[str, Any] = {
        "valid": validate_correlation(p, tol).ok,
        "nonsignalling": nonsignalling,
        "signalling_defect": defect,
    }
    for name, predicate in (("synchronous", is_synchronous), ("symmetric", is_symmetric)):
        try:
            report[name] = predicate(p, tol)
        except ScenarioMismatch:
            report[name] = None
    _output(ctx, report)


def run(argv: List[str] = None) -> int:
    """Runs one command and returns its exit code instead of leaving the interpreter"""
    try:
        result = main.main(args=argv, prog_name="maxent", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return ExitCode.Usage
    except click.Abort:
        return ExitCode.Usage
    return result if isinstance(result, int) else ExitCode.Ok
