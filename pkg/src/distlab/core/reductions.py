"""Reduction rules at a distance, strategy drivers and the affine simulation of β."""

import logging
from typing import Optional

from ..errors import DistlabError
from ..models import (
    Abs,
    App,
    Name,
    NormalizationResult,
    Path,
    Redex,
    Rule,
    Term,
    Trace,
    TraceStep,
    Var,
)
from ..utils.paths import ARG, BODY, FUN, format_path, replace_at, subterm_at, subterms
from .spine import analyze_spine, primary_pairs
from .syntax import NameSupply, refresh, substitute

logger = logging.getLogger(__name__)

FUEL_FACTOR = 10
TYPED_WATCHDOG = 1_000_000


class StaleRedexError(DistlabError):
    """The redex no longer matches the term it is applied to."""

    pass


class FuelExhaustedError(DistlabError):
    """A driver ran out of steps before reaching a normal form."""

    pass


def default_fuel(t: Term, typed: bool = False) -> int:
    """10·size² for untyped drivers; a large watchdog bound for typed inputs."""
    if typed:
        return TYPED_WATCHDOG
    return FUEL_FACTOR * t.size * t.size


def distance_binder(t: Term, position: Path) -> Optional[Path]:
    """Path of the λx of E[λx.u]s when the application at position is s's node.

    Found by bracket counting down the spine of the function part.
    """
    node = subterm_at(t, position)
    if not isinstance(node, App):
        return None
    depth = 1
    node, path = node.fun, position + (FUN,)
    while True:
        if isinstance(node, Abs):
            depth -= 1
            if depth == 0:
                return path
            node, path = node.body, path + (BODY,)
        elif isinstance(node, App):
            depth += 1
            node, path = node.fun, path + (FUN,)
        else:
            return None


def free_occurrences(t: Term, x: Name, prefix: Path = ()) -> list[Path]:
    """Paths of the free occurrences of x in t, left to right."""
    if isinstance(t, Var):
        return [prefix] if t.name == x else []
    if isinstance(t, Abs):
        if t.binder == x:
            return []
        return free_occurrences(t.body, x, prefix + (BODY,))
    return free_occurrences(t.fun, x, prefix + (FUN,)) + free_occurrences(t.arg, x, prefix + (ARG,))


def _distance_redexes(t: Term) -> list[Redex]:
    redexes = []
    for path, node in subterms(t):
        if not isinstance(node, App):
            continue
        abs_path = distance_binder(t, path)
        if abs_path is None:
            continue
        lam = subterm_at(t, abs_path)
        redexes.append(
            Redex(rule=Rule.BETA_D, position=path, abs_position=abs_path, binder=lam.binder, argument=node.arg)
        )
    return redexes


def _head_redex(t: Term) -> list[Redex]:
    node, path = t, ()
    while isinstance(node, Abs):
        node, path = node.body, path + (BODY,)
    parent: Optional[tuple[Path, App]] = None
    while isinstance(node, App):
        parent = (path, node)
        node, path = node.fun, path + (FUN,)
    if parent is None or not isinstance(node, Abs):
        return []
    app_path, app_node = parent
    return [
        Redex(
            rule=Rule.HEAD,
            position=app_path,
            abs_position=app_path + (FUN,),
            binder=node.binder,
            argument=app_node.arg,
        )
    ]


def _linear_head_redex(t: Term) -> list[Redex]:
    analysis = analyze_spine(t)
    partner = analysis.partner()
    for position, item in enumerate(analysis.word):
        if getattr(item, "binder", None) == analysis.head_var:
            if position not in partner:
                return []
            arg_position = partner[position]
            return [
                Redex(
                    rule=Rule.LINEAR_HEAD,
                    position=analysis.paths[arg_position],
                    abs_position=analysis.paths[position],
                    binder=item.binder,
                    argument=analysis.word[arg_position].argument,
                    occurrence=analysis.head_path,
                )
            ]
    return []


def find_redexes(t: Term, rule: Rule) -> list[Redex]:
    """All instances of rule in t, outside-in and left to right.

    HEAD and LINEAR_HEAD give at most one redex. AFFINE gives LINEAR and
    GARBAGE redexes tagged with their own rule.
    """
    if rule == Rule.BETA:
        return [
            Redex(rule=Rule.BETA, position=path, abs_position=path + (FUN,), binder=node.fun.binder, argument=node.arg)
            for path, node in subterms(t)
            if isinstance(node, App) and isinstance(node.fun, Abs)
        ]
    if rule == Rule.BETA_D:
        return _distance_redexes(t)
    if rule == Rule.HEAD:
        return _head_redex(t)
    if rule == Rule.LINEAR_HEAD:
        return _linear_head_redex(t)
    redexes = []
    for r in _distance_redexes(t):
        body = subterm_at(t, r.abs_position).body
        occurrences = free_occurrences(body, r.binder, r.abs_position + (BODY,))
        if occurrences and rule in (Rule.LINEAR, Rule.AFFINE):
            redexes.extend(r.model_copy(update={"rule": Rule.LINEAR, "occurrence": o}) for o in occurrences)
        elif not occurrences and rule in (Rule.GARBAGE, Rule.AFFINE):
            redexes.append(r.model_copy(update={"rule": Rule.GARBAGE}))
    return redexes


def apply_step(t: Term, r: Redex, supply: NameSupply) -> Term:
    """Contract r in t.

    Raises:
        StaleRedexError: if r is not a redex of t for its rule
    """
    if not any(r.same_site(other) for other in find_redexes(t, r.rule)):
        raise StaleRedexError(f"no {r.rule.value} redex at {format_path(r.position)} in {t}")
    node = subterm_at(t, r.position)
    if r.rule in (Rule.LINEAR, Rule.LINEAR_HEAD):
        return replace_at(t, r.occurrence, refresh(node.arg, supply))
    relative = r.abs_position[len(r.position) + 1 :]
    lam = subterm_at(node.fun, relative)
    if r.rule == Rule.GARBAGE:
        contracted = lam.body
    else:
        contracted = substitute(lam.body, lam.binder, node.arg, supply)
    return replace_at(t, r.position, replace_at(node.fun, relative, contracted))


def _choose(rule: Rule, redexes: list[Redex]) -> Redex:
    if rule == Rule.LINEAR:
        # leftmost occurrence of the innermost redex
        deepest = max(len(r.position) for r in redexes)
        return next(r for r in redexes if len(r.position) == deepest)
    return redexes[0]


def normalize(
    t: Term,
    rule: Rule,
    fuel: int | None = None,
    supply: NameSupply | None = None,
) -> NormalizationResult:
    """Contract redexes of rule until none is left or fuel runs out."""
    supply = supply or NameSupply.for_terms(t)
    fuel = default_fuel(t) if fuel is None else fuel
    steps: list[TraceStep] = []
    current = t
    while True:
        redexes = find_redexes(current, rule)
        if not redexes:
            return NormalizationResult(term=current, trace=Trace(start=t, steps=tuple(steps)))
        if len(steps) >= fuel:
            logger.warning("%s normalization ran out of fuel after %d steps", rule.value, fuel)
            return NormalizationResult(term=current, trace=Trace(start=t, steps=tuple(steps)), exhausted=True)
        redex = _choose(rule, redexes)
        current = apply_step(current, redex, supply)
        logger.debug("step %d %s @ %s", len(steps) + 1, redex.rule.value, format_path(redex.position))
        steps.append(TraceStep(redex=redex, result=current))


def simulate_beta_by_affine(t: Term, r: Redex, supply: NameSupply) -> Trace:
    """Replace a β/β_d contraction by k linear steps and one garbage step on the same redex."""
    if r.rule not in (Rule.BETA, Rule.BETA_D, Rule.HEAD):
        raise ValueError(f"expected a beta redex, got {r.rule.value}")
    if not any(r.same_site(other) for other in find_redexes(t, r.rule)):
        raise StaleRedexError(f"no {r.rule.value} redex at {format_path(r.position)} in {t}")

    def at_site(term: Term, rule: Rule) -> list[Redex]:
        return [x for x in find_redexes(term, rule) if x.position == r.position and x.abs_position == r.abs_position]

    steps: list[TraceStep] = []
    current = t
    while linear := at_site(current, Rule.LINEAR):
        current = apply_step(current, linear[0], supply)
        steps.append(TraceStep(redex=linear[0], result=current))
    garbage = at_site(current, Rule.GARBAGE)[0]
    current = apply_step(current, garbage, supply)
    steps.append(TraceStep(redex=garbage, result=current))
    return Trace(start=t, steps=tuple(steps))


def reduce_primary_redexes(t: Term, supply: NameSupply, fuel: int | None = None) -> Term:
    """β_d-contract primary redexes, hole-nearest first, until none is left.

    Raises:
        FuelExhaustedError: if fuel runs out
    """
    fuel = default_fuel(t) if fuel is None else fuel
    for _ in range(fuel + 1):
        analysis = analyze_spine(t)
        pairs = primary_pairs(analysis)
        if not pairs:
            return t
        arg_pos, abs_pos = pairs[0]
        redex = Redex(
            rule=Rule.BETA_D,
            position=analysis.paths[arg_pos],
            abs_position=analysis.paths[abs_pos],
            binder=analysis.word[abs_pos].binder,
            argument=analysis.word[arg_pos].argument,
        )
        t = apply_step(t, redex, supply)
    raise FuelExhaustedError(f"primary redexes not exhausted within {fuel} steps")


def is_head_normal(t: Term) -> bool:
    """λy1...λyk. x u1 ... uh."""
    return not _head_redex(t)


def linear_head_normal_form(t: Term, supply: NameSupply | None = None, fuel: int | None = None) -> NormalizationResult:
    return normalize(t, Rule.LINEAR_HEAD, fuel, supply)


def beta_normal_form_by_head(t: Term, supply: NameSupply | None = None, fuel: int | None = None) -> Term:
    """β-normal form found by head reduction, then recursing into the head arguments.

    Raises:
        FuelExhaustedError: if the total number of head steps exceeds fuel
    """
    supply = supply or NameSupply.for_terms(t)
    budget = [default_fuel(t) if fuel is None else fuel]

    def go(u: Term) -> Term:
        outcome = normalize(u, Rule.HEAD, budget[0], supply)
        budget[0] -= len(outcome.trace)
        if outcome.exhausted:
            raise FuelExhaustedError("head reduction did not reach a head normal form")
        return _map_head_args(outcome.term, go)

    return go(t)


def _map_head_args(t: Term, f) -> Term:
    if isinstance(t, Abs):
        return Abs(binder=t.binder, annotation=t.annotation, body=_map_head_args(t.body, f))
    if isinstance(t, App):
        return App(fun=_map_head_args(t.fun, f), arg=f(t.arg))
    return t
