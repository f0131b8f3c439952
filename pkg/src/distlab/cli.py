"""CLI entry point for distlab."""

import sys
from functools import wraps
from pathlib import Path
from typing import Callable

import click
from dotenv import load_dotenv
from rich.console import Console
from rich.markup import escape

from . import __version__
from .core.equivalence import (
    ArgumentIndexError,
    ENormalizationError,
    arg,
    equivalent,
    head_canonical,
    leftmost,
    normalize_e,
    random_selector,
    rightmost,
)
from .core.gandy import SemanticError, default_valuation, measure
from .core.generators import GenerationError
from .core.postponement import PostponementError, postpone_garbage
from .core.reductions import FuelExhaustedError, StaleRedexError, normalize
from .core.spine import NotAnEContextError, analyze_spine, eta, is_e_context
from .core.suites import UnknownSuiteError, run_property_suite, suite_names
from .core.syntax import NameSupply, ensure_distinct_names, rename_apart
from .core.typecheck import TypeCheckError, infer, is_typed
from .errors import DistlabError
from .models import EquivRelation, GenConfig, Rule, Term, Var, Verdict
from .utils.log import setup_logging
from .utils.parser import ParseError, parse_context, parse_term, print_type
from .utils.paths import format_path
from .utils.settings import LOG_LEVELS, Settings, SettingsError, load_settings

# Load environment variables
load_dotenv()

console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True, highlight=False, soft_wrap=True)

EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_UNKNOWN = 3

RECURSION_LIMIT = 20_000

USAGE_ERRORS = (
    ParseError,
    TypeCheckError,
    SemanticError,
    SettingsError,
    UnknownSuiteError,
    ArgumentIndexError,
    NotAnEContextError,
    GenerationError,
    StaleRedexError,
)
UNKNOWN_ERRORS = (FuelExhaustedError, ENormalizationError, PostponementError)

SELECTORS = ("leftmost", "rightmost", "random")


def out(text: str) -> None:
    """Print plain text on stdout; terms contain brackets rich would read as markup."""
    console.print(text, markup=False)


def fail(message: str, code: int) -> None:
    err_console.print(f"[bold red]Error:[/] {escape(message)}")
    raise SystemExit(code)


def handle_errors(f: Callable) -> Callable:
    """Map distlab errors to exit codes: 2 for bad input, 3 for exhausted fuel."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except USAGE_ERRORS as e:
            fail(str(e), EXIT_USAGE)
        except UNKNOWN_ERRORS as e:
            fail(str(e), EXIT_UNKNOWN)
        except DistlabError as e:
            fail(str(e), EXIT_USAGE)

    return wrapper


def subcommand(name: str | None = None):
    """Register a subcommand with --version and error mapping."""

    def decorator(f: Callable) -> Callable:
        f = handle_errors(f)
        f = click.version_option(__version__, prog_name="distlab")(f)
        return main.command(name)(f)

    return decorator


def file_option(f: Callable) -> Callable:
    return click.option(
        "--file",
        "-f",
        "file",
        type=click.Path(exists=True, dir_okay=False, path_type=Path),
        default=None,
        help="Read the term from a file instead of the command line",
    )(f)


def ctx_option(f: Callable) -> Callable:
    return click.option(
        "--ctx",
        "ctx_text",
        default="",
        help='Types of free variables, e.g. "x:o,f:o->o"',
    )(f)


def read_term(term: str | None, file: Path | None, rename: bool = True) -> Term:
    """Parse the TERM argument or --file; bound variables are renamed apart unless rename is off."""
    if file is not None:
        t = parse_term(file.read_text())
    elif term is None:
        raise click.UsageError("missing TERM (give it as an argument or with --file)")
    else:
        t = parse_term(term)
    return ensure_distinct_names(t, NameSupply.for_terms(t)) if rename else t


def settings_of(ctx: click.Context) -> Settings:
    return ctx.obj["settings"]


def fuel_for(t: Term, settings: Settings, fuel: int | None, typed: bool) -> int:
    if fuel is not None:
        return fuel
    return settings.typed_fuel if typed else settings.untyped_fuel(t.size)


@click.group()
@click.version_option(__version__, prog_name="distlab")
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Log level for diagnostics on stderr (default: DISTLAB_LOG_LEVEL or WARNING)",
)
@click.pass_context
def main(ctx: click.Context, log_level: str | None):
    """Laboratory for λ-calculus reduction at a distance.

    Terms use a backslash for λ; quote them for the shell:

    \b
    Examples:
      distlab canon '(\\y. \\x. v) s t'
      distlab equiv --rel sigma '(\\y. (\\x. v) t) s' '(\\x. (\\y. v) s) t'
      distlab reduce --rule linear-head --trace '(\\y. \\x. x) u s'
    """
    sys.setrecursionlimit(max(sys.getrecursionlimit(), RECURSION_LIMIT))
    try:
        settings = load_settings()
    except SettingsError as e:
        fail(str(e), EXIT_USAGE)
    setup_logging(log_level or settings.log_level, err_console)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings


@subcommand()
@click.argument("term", required=False)
@file_option
@click.option("--rename", is_flag=True, help="Rename bound variables to satisfy the distinct names property")
def parse(term: str | None, file: Path | None, rename: bool):
    """Parse a term and print it back."""
    out(str(read_term(term, file, rename=rename)))


@subcommand()
@click.argument("term", required=False)
@file_option
def spine(term: str | None, file: Path | None):
    """Show the spine word of a term, root to hole, with its bracket matching.

    \b
    Output lines:
      abs <binder> | arg <term>   one per spine item
      head <variable>
      pair <arg-index> <abs-index>  one per primary redex, hole-nearest binder first
      eta <term>/<binder>   one per pair of η(E), only when the context is an E-context
      counts lambda=<n> app=<m> primary=<p>
    """
    analysis = analyze_spine(read_term(term, file))
    for item in analysis.word:
        if item.kind == "abs":
            out(f"abs {item.binder}")
        else:
            out(f"arg {item.argument}")
    out(f"head {analysis.head_var}")
    for arg_pos, abs_pos in sorted(analysis.matching, key=lambda pair: pair[1], reverse=True):
        out(f"pair {arg_pos} {abs_pos}")
    if is_e_context(analysis):
        for binding in eta(analysis.context).pairs:
            argument = str(binding.term) if isinstance(binding.term, Var) else f"({binding.term})"
            out(f"eta {argument}/{binding.variable}")
    out(f"counts lambda={analysis.n_lambda} app={analysis.n_app} primary={analysis.n_primary}")


@subcommand()
@click.argument("term", required=False)
@file_option
@click.option(
    "--rewrite",
    type=click.Choice(SELECTORS),
    default=None,
    help="Reach the canonical form by →E rewriting with this redex selector",
)
@click.option("--seed", type=int, default=None, help="Seed of the random selector")
@click.option("--arg", "index", type=int, default=None, help="Print ar(t, i) instead: head argument i > 0, primary argument i < 0")
@click.pass_context
def canon(ctx: click.Context, term: str | None, file: Path | None, rewrite: str | None, seed: int | None, index: int | None):
    """Print the head canonical form of a term.

    \b
    Examples:
      distlab canon '(\\y. \\x. v) s t'      # (\\y. (\\x. v) t) s
      distlab canon --arg -1 '(\\y. \\x. v) s t'
    """
    t = read_term(term, file)
    if index is not None:
        out(str(arg(t, index)))
        return
    if rewrite is None:
        out(str(head_canonical(t)))
        return
    selector = {
        "leftmost": leftmost,
        "rightmost": rightmost,
        "random": random_selector(seed if seed is not None else settings_of(ctx).seed),
    }[rewrite]
    out(str(normalize_e(t, selector)))


@subcommand()
@click.argument("left")
@click.argument("right")
@click.option(
    "--rel",
    type=click.Choice([r.value for r in EquivRelation]),
    default=EquivRelation.SIGMA.value,
    show_default=True,
    help="Equivalence to decide",
)
@click.option("--fuel", type=int, default=None, help="Step bound for β-normalization")
@click.pass_context
def equiv(ctx: click.Context, left: str, right: str, rel: str, fuel: int | None):
    """Decide whether two terms are equivalent; prints true, false or unknown.

    Exit status 0 for true, 1 for false, 3 for unknown.
    """
    t, s = parse_term(left), parse_term(right)
    t, s = rename_apart(t, s, supply=NameSupply.for_terms(t, s))
    if fuel is None:
        fuel = settings_of(ctx).untyped_fuel(max(t.size, s.size))
    verdict = equivalent(t, s, EquivRelation(rel), fuel)
    out(verdict.value)
    if verdict is Verdict.FALSE:
        raise SystemExit(EXIT_NEGATIVE)
    if verdict is Verdict.UNKNOWN:
        raise SystemExit(EXIT_UNKNOWN)


@subcommand()
@click.argument("term", required=False)
@file_option
@ctx_option
@click.option(
    "--rule",
    type=click.Choice([r.value for r in Rule]),
    default=Rule.BETA.value,
    show_default=True,
    help="Reduction rule to normalize with",
)
@click.option("--fuel", type=int, default=None, help="Step bound (default: 10·size² untyped, a watchdog when typed)")
@click.option("--trace", is_flag=True, help="Print one line per step: step <i> <rule> @ <path>: <term>")
@click.option("--postpone", is_flag=True, help="Reorder an affine trace so garbage steps come last")
@click.pass_context
def reduce(
    ctx: click.Context,
    term: str | None,
    file: Path | None,
    ctx_text: str,
    rule: str,
    fuel: int | None,
    trace: bool,
    postpone: bool,
):
    """Normalize a term with one reduction rule.

    \b
    Examples:
      distlab reduce --rule affine --trace '(\\x. x x) y'
      distlab reduce --rule head '(\\x. x) ((\\y. y) z)'
    """
    t = read_term(term, file)
    typed = is_typed(t, parse_context(ctx_text))
    outcome = normalize(t, Rule(rule), fuel_for(t, settings_of(ctx), fuel, typed))
    steps = outcome.trace
    if postpone:
        if Rule(rule) not in (Rule.AFFINE, Rule.LINEAR, Rule.GARBAGE):
            raise click.UsageError("--postpone applies to the affine, linear and garbage rules")
        steps = postpone_garbage(steps)
    if trace:
        for i, step in enumerate(steps.steps, start=1):
            out(f"step {i} {step.redex.rule.value} @ {format_path(step.redex.position)}: {step.result}")
    out(str(steps.final))
    if outcome.exhausted:
        fail(f"no normal form within {len(outcome.trace)} steps", EXIT_UNKNOWN)


@subcommand()
@click.argument("term", required=False)
@file_option
@ctx_option
def typecheck(term: str | None, file: Path | None, ctx_text: str):
    """Print the simple type of an annotated term.

    \b
    Examples:
      distlab typecheck '\\x:o. x'
      distlab typecheck --ctx 'x:o->o,y:o' 'x y'
    """
    t = read_term(term, file)
    out(print_type(infer(t, parse_context(ctx_text))))


@subcommand("measure")
@click.argument("term", required=False)
@file_option
@ctx_option
@click.option("--trace", is_flag=True, help="Print the measure after every step of --rule")
@click.option(
    "--rule",
    type=click.Choice([r.value for r in Rule]),
    default=Rule.BETA.value,
    show_default=True,
    help="Rule whose trace is measured",
)
@click.option("--untuned", is_flag=True, help="Interpret variables without the +1")
@click.pass_context
def measure_cmd(ctx: click.Context, term: str | None, file: Path | None, ctx_text: str, trace: bool, rule: str, untuned: bool):
    """Print the measure of a typed term under the default valuation.

    \b
    Examples:
      distlab measure '\\x:o. x'                      # 2
      distlab measure --ctx y:o '(\\x:o. x) y'         # 4
      distlab measure --ctx y:o --trace --rule affine '(\\x:o. x) y'
    """
    t = read_term(term, file)
    type_ctx = parse_context(ctx_text)
    infer(t, type_ctx)
    valuation = default_valuation(type_ctx)
    if not trace:
        out(str(measure(t, valuation, tuned=not untuned)))
        return
    outcome = normalize(t, Rule(rule), fuel_for(t, settings_of(ctx), None, typed=True))
    out(f"start: {measure(t, valuation, tuned=not untuned)}")
    for i, step in enumerate(outcome.trace.steps, start=1):
        value = measure(step.result, valuation, tuned=not untuned)
        out(f"step {i} {step.redex.rule.value} @ {format_path(step.redex.position)}: {value}")
    if outcome.exhausted:
        fail(f"no normal form within {len(outcome.trace)} steps", EXIT_UNKNOWN)


@subcommand()
@click.option("--suite", "suite", default="all", show_default=True, help="Suite name, or all")
@click.option("--seed", type=int, default=None, help="Base seed (default: DISTLAB_SEED or 0)")
@click.option("--count", type=click.IntRange(min=0), default=100, show_default=True, help="Generated cases per suite")
@click.option("--max-size", type=click.IntRange(min=1), default=20, show_default=True, help="Size bound for generated terms")
@click.option("--exhaustive", type=click.IntRange(min=1, max=8), default=None, help="Also check every term up to this size, where supported")
@click.option("--list", "list_suites", is_flag=True, help="List registered suites and exit")
@click.pass_context
def check(
    ctx: click.Context,
    suite: str,
    seed: int | None,
    count: int,
    max_size: int,
    exhaustive: int | None,
    list_suites: bool,
):
    """Run property suites; one FAIL <suite> <seed> <term> line per counterexample.

    Exit status 0 iff every suite passes.
    """
    if list_suites:
        for name in suite_names():
            out(name)
        return
    cfg = GenConfig(seed=seed if seed is not None else settings_of(ctx).seed, max_size=max_size)
    names = suite_names() if suite == "all" else [suite]
    all_ok = True
    for name in names:
        report = run_property_suite(name, cfg, count=count, exhaustive=exhaustive)
        for line in report.lines():
            out(line)
        all_ok = all_ok and report.ok
    if not all_ok:
        raise SystemExit(EXIT_NEGATIVE)


if __name__ == "__main__":
    main()
