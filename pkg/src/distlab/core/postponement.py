"""Reordering affine traces so that every garbage step comes after every linear step."""

import logging

from ..errors import DistlabError
from ..models import Path, Redex, Rule, Term, Trace, TraceStep
from ..utils.paths import ARG, BODY, FUN, format_path, is_prefix
from .reductions import apply_step, find_redexes
from .syntax import NameSupply, alpha_eq

logger = logging.getLogger(__name__)


class PostponementError(DistlabError):
    """A commuted step could not be replayed.

    Carries the term reached, the index of the step that failed and the
    redex that was expected there.
    """

    def __init__(self, message: str, term: Term, index: int, redex: Redex | None = None):
        self.term = term
        self.index = index
        self.redex = redex
        super().__init__(f"{message} (step {index}, term {term})")


def _back(path: Path, garbage: Redex) -> Path:
    """Address in the term before ``garbage`` of the node at ``path`` after it."""
    g = garbage.position
    if not is_prefix(g, path):
        return path
    rel = garbage.abs_position[len(g) + 1 :]
    rest = path[len(g) :]
    if rest[: len(rel)] == rel:
        rest = rel + (BODY,) + rest[len(rel) :]
    return g + (FUN,) + rest


def _swap(garbage: Redex, linear: Redex) -> list[Redex]:
    """Commute ``garbage; linear`` into ``linear'; garbage'...``.

    When the erased redex sits inside the argument being copied, the copy
    carries its own instance of it, which is erased as well.
    """
    moved = linear.model_copy(
        update={
            "position": _back(linear.position, garbage),
            "abs_position": _back(linear.abs_position, garbage),
            "occurrence": _back(linear.occurrence, garbage),
        }
    )
    result = [moved, garbage]
    source = moved.position + (ARG,)
    if is_prefix(source, garbage.position):
        offset = len(source)
        result.append(
            garbage.model_copy(
                update={
                    "position": moved.occurrence + garbage.position[offset:],
                    "abs_position": moved.occurrence + garbage.abs_position[offset:],
                }
            )
        )
    return result


def _postponed_order(redexes: list[Redex]) -> list[Redex]:
    order = list(redexes)
    changed = True
    while changed:
        changed = False
        for i in range(len(order) - 1):
            if order[i].rule == Rule.GARBAGE and order[i + 1].rule == Rule.LINEAR:
                order[i : i + 2] = _swap(order[i], order[i + 1])
                changed = True
                break
    return order


def postpone_garbage(tr: Trace, supply: NameSupply | None = None) -> Trace:
    """Same start, α-equal endpoint, shaped as linear steps followed by garbage steps.

    Raises:
        ValueError: if tr contains a step other than linear or garbage
        PostponementError: if a commuted step does not replay
    """
    if any(rule not in (Rule.LINEAR, Rule.GARBAGE) for rule in tr.rules):
        raise ValueError("garbage postponement applies to linear and garbage steps only")
    order = _postponed_order([step.redex for step in tr.steps])
    supply = supply or NameSupply.for_terms(*tr.terms)

    current = tr.start
    steps: list[TraceStep] = []
    for index, wanted in enumerate(order):
        found = [r for r in find_redexes(current, wanted.rule) if r.same_site(wanted)]
        if not found:
            raise PostponementError(
                f"no {wanted.rule.value} redex at {format_path(wanted.position)}", current, index, wanted
            )
        current = apply_step(current, found[0], supply)
        steps.append(TraceStep(redex=found[0], result=current))
    result = Trace(start=tr.start, steps=tuple(steps))
    if not alpha_eq(result.final, tr.final):
        raise PostponementError("reordered trace ends elsewhere", result.final, len(steps))
    logger.debug("postponed garbage: %d steps became %d", len(tr), len(result))
    return result
