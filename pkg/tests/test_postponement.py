import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from conftest import t
from distlab.core.generators import GenerationError, gen_typed_term
from distlab.core.postponement import postpone_garbage
from distlab.core.reductions import apply_step, find_redexes, normalize
from distlab.core.suites import random_affine_trace
from distlab.core.syntax import NameSupply, alpha_eq
from distlab.models import O, GenConfig, Rule, Term, Trace, TraceStep


def run(start: Term, *picks: tuple[Rule, tuple[str, ...]]) -> Trace:
    """Trace taking, for each pick, the first redex of the rule at the position."""
    supply = NameSupply.for_terms(start)
    current = start
    steps = []
    for rule, position in picks:
        redex = next(r for r in find_redexes(current, rule) if r.position == position)
        current = apply_step(current, redex, supply)
        steps.append(TraceStep(redex=redex, result=current))
    return Trace(start=start, steps=tuple(steps))


def test_independent_garbage_moves_after_linear():
    trace = run(
        t("f ((\\x. z) y) ((\\u. u) w)"),
        (Rule.GARBAGE, ("f", "a")),
        (Rule.LINEAR, ("a",)),
        (Rule.GARBAGE, ("a",)),
    )
    postponed = postpone_garbage(trace)
    assert postponed.rules == [Rule.LINEAR, Rule.GARBAGE, Rule.GARBAGE]
    assert postponed.start == trace.start
    assert alpha_eq(postponed.final, t("f z w"))


def test_garbage_inside_a_copied_argument_is_erased_twice():
    trace = run(
        t("(\\v. v v) ((\\x. z) y)"),
        (Rule.GARBAGE, ("a",)),
        (Rule.LINEAR, ()),
    )
    postponed = postpone_garbage(trace)
    assert postponed.rules == [Rule.LINEAR, Rule.GARBAGE, Rule.GARBAGE]
    assert alpha_eq(postponed.final, trace.final)
    assert alpha_eq(trace.final, t("(\\v. z v) z"))


def test_postponed_trace_is_unchanged():
    trace = normalize(t("(\\x. x x) y"), Rule.AFFINE).trace
    postponed = postpone_garbage(trace)
    assert postponed.rules == trace.rules
    assert postponed.final == trace.final


def test_only_affine_traces():
    trace = normalize(t("(\\x. x) y"), Rule.BETA).trace
    with pytest.raises(ValueError):
        postpone_garbage(trace)


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_random_affine_traces(seed):
    cfg = GenConfig(seed=seed, max_size=14)
    try:
        term = gen_typed_term(cfg, O)
    except GenerationError:
        hyp.reject()
    trace = random_affine_trace(term, seed)
    postponed = postpone_garbage(trace)
    rules = postponed.rules
    if Rule.GARBAGE in rules:
        assert Rule.LINEAR not in rules[rules.index(Rule.GARBAGE) :]
    assert alpha_eq(postponed.final, trace.final)
