"""Spine analysis, E-contexts, η(E) and the unique spine decomposition."""

from typing import Sequence

from ..errors import DistlabError
from ..models import (
    HOLE,
    Abs,
    Binding,
    Decomposition,
    EContext,
    Environment,
    HeadContext,
    Name,
    SAbs,
    SArg,
    SpineAnalysis,
    SpineItem,
    Term,
    Var,
)
from ..utils.paths import BODY, FUN
from .syntax import free_vars


class NotAnEContextError(DistlabError):
    """A head context with unmatched spine items was used as an E-context."""

    pass


def match_word(word: Sequence[SpineItem]) -> tuple[list[tuple[int, int]], list[int], list[int]]:
    """Bracket matching of a spine word read root to hole.

    Arguments open, abstractions close. Returns (matching, unmatched_abs,
    unmatched_args); matching pairs are (arg_position, abs_position) sorted by
    abs_position.
    """
    open_args: list[int] = []
    matching: list[tuple[int, int]] = []
    unmatched_abs: list[int] = []
    for position, item in enumerate(word):
        if isinstance(item, SArg):
            open_args.append(position)
        elif open_args:
            matching.append((open_args.pop(), position))
        else:
            unmatched_abs.append(position)
    return matching, unmatched_abs, open_args


def analyze_spine(t: Term) -> SpineAnalysis:
    """Spine word of the maximal head context of t, with its matching."""
    word: list[SpineItem] = []
    paths = []
    node, path = t, ()
    while not isinstance(node, Var):
        paths.append(path)
        if isinstance(node, Abs):
            word.append(SAbs(binder=node.binder, annotation=node.annotation))
            node, path = node.body, path + (BODY,)
        else:
            word.append(SArg(argument=node.arg))
            node, path = node.fun, path + (FUN,)
    matching, unmatched_abs, unmatched_args = match_word(word)
    return SpineAnalysis(
        word=tuple(word),
        paths=tuple(paths),
        head_var=node.name,
        head_path=path,
        matching=tuple(matching),
        unmatched_abs=tuple(unmatched_abs),
        unmatched_args=tuple(unmatched_args),
    )


def head_context(t: Term) -> HeadContext:
    """Maximal head context H with t = H[hv(t)]."""
    return analyze_spine(t).context


def is_e_context(h: SpineAnalysis | HeadContext) -> bool:
    """True iff every spine item is matched."""
    word = h.word if isinstance(h, SpineAnalysis) else h.items
    _, unmatched_abs, unmatched_args = match_word(word)
    return not unmatched_abs and not unmatched_args


def e_context(h: SpineAnalysis | HeadContext) -> EContext:
    """Validate h as an E-context.

    Raises:
        NotAnEContextError: if some spine item is unmatched
    """
    if isinstance(h, EContext):
        return h
    if not is_e_context(h):
        raise NotAnEContextError("spine abstractions and arguments are not balanced")
    word = h.word if isinstance(h, SpineAnalysis) else h.items
    return EContext(items=tuple(word))


def eta(e: EContext | HeadContext) -> Environment:
    """η(E): one pair per matched (argument, binder), binders ordered hole to root."""
    e = e_context(e)
    matching, _, _ = match_word(e.items)
    pairs = []
    for arg_pos, abs_pos in sorted(matching, key=lambda pair: pair[1], reverse=True):
        binder = e.items[abs_pos]
        pairs.append(Binding(term=e.items[arg_pos].argument, variable=binder.binder, annotation=binder.annotation))
    return Environment(pairs=tuple(pairs))


def decompose(t: Term) -> Decomposition:
    """Split the spine at unmatched items into maximal balanced blocks E0..E(n+m)."""
    analysis = analyze_spine(t)
    cuts = sorted(analysis.unmatched_abs + analysis.unmatched_args)
    blocks: list[EContext] = []
    start = 0
    for cut in cuts + [len(analysis.word)]:
        blocks.append(EContext(items=analysis.word[start:cut]))
        start = cut + 1
    head_abs = tuple(analysis.word[i] for i in analysis.unmatched_abs)
    # unmatched arguments read root to hole are t_m ... t_1
    head_args = tuple(analysis.word[i].argument for i in reversed(analysis.unmatched_args))
    return Decomposition(e_blocks=tuple(blocks), head_abs=head_abs, head_args=head_args, head_var=analysis.head_var)


def primary_pairs(analysis: SpineAnalysis) -> list[tuple[int, int]]:
    """Matched (arg_position, abs_position) pairs ordered hole to root by binder."""
    return sorted(analysis.matching, key=lambda pair: pair[1], reverse=True)


def primary_redexes(t: Term) -> list[tuple[Name, Term]]:
    """Primary redexes of t as (binder, argument), hole-nearest binder first."""
    analysis = analyze_spine(t)
    return [(analysis.word[b].binder, analysis.word[a].argument) for a, b in primary_pairs(analysis)]


def context_free_vars(h: HeadContext | Sequence[SpineItem]) -> frozenset[Name]:
    """FV of a context, the hole counting as a constant."""
    items = h.items if isinstance(h, HeadContext) else tuple(h)
    return free_vars(HeadContext(items=items).plug(Var(name=HOLE))) - {HOLE}


def spine_vars(h: HeadContext | Sequence[SpineItem]) -> frozenset[Name]:
    """SV(H): variables bound by spine abstractions."""
    items = h.items if isinstance(h, HeadContext) else tuple(h)
    return frozenset(item.binder for item in items if isinstance(item, SAbs))
