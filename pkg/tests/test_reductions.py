import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from conftest import t
from distlab.core.generators import gen_term
from distlab.core.reductions import (
    FuelExhaustedError,
    StaleRedexError,
    apply_step,
    beta_normal_form_by_head,
    default_fuel,
    find_redexes,
    is_head_normal,
    linear_head_normal_form,
    normalize,
    reduce_primary_redexes,
    simulate_beta_by_affine,
)
from distlab.core.spine import primary_redexes
from distlab.core.syntax import NameSupply, alpha_eq, has_distinct_names
from distlab.models import GenConfig, Rule


def test_beta_redexes():
    redexes = find_redexes(t("(\\x. x) ((\\y. y) z)"), Rule.BETA)
    assert [r.position for r in redexes] == [(), ("a",)]


def test_distance_redexes_look_through_e_contexts():
    redexes = find_redexes(t("(\\y. \\x. x z) u s"), Rule.BETA_D)
    assert [(str(r.binder), str(r.argument)) for r in redexes] == [("x", "s"), ("y", "u")]
    assert find_redexes(t("(\\y. \\x. x z) u s"), Rule.BETA) == []


def test_distance_step(supply):
    term = t("(\\y. \\x. x z) u s")
    result = apply_step(term, find_redexes(term, Rule.BETA_D)[0], supply)
    assert alpha_eq(result, t("(\\y. s z) u"))


def test_linear_redexes_one_per_occurrence():
    redexes = find_redexes(t("(\\x. x x) y"), Rule.LINEAR)
    assert len(redexes) == 2
    assert [r.occurrence for r in redexes] == [("f", "b", "f"), ("f", "b", "a")]


def test_garbage_step(supply):
    term = t("(\\x. z) y")
    [redex] = find_redexes(term, Rule.GARBAGE)
    assert apply_step(term, redex, supply) == t("z")


def test_affine_normalization():
    outcome = normalize(t("(\\x. x x) y"), Rule.AFFINE)
    assert outcome.term == t("y y")
    assert outcome.trace.rules == [Rule.LINEAR, Rule.LINEAR, Rule.GARBAGE]
    assert not outcome.exhausted


def test_stale_redex(supply):
    term = t("(\\x. z) y")
    [redex] = find_redexes(term, Rule.GARBAGE)
    with pytest.raises(StaleRedexError):
        apply_step(t("z"), redex, supply)


def test_head_reduction():
    term = t("(\\x. x) ((\\y. y) z)")
    [redex] = find_redexes(term, Rule.HEAD)
    assert redex.position == ()
    assert normalize(term, Rule.HEAD).term == t("z")
    assert is_head_normal(t("\\x. x ((\\y. y) z)"))
    assert not is_head_normal(term)


def test_head_normal_form_then_arguments():
    assert beta_normal_form_by_head(t("f ((\\x. x) y) ((\\u. u u) z)")) == t("f y (z z)")


def test_linear_head_reduction():
    outcome = linear_head_normal_form(t("(\\y. \\x. x) u s"))
    assert len(outcome.trace) == 1
    assert alpha_eq(outcome.term, t("(\\y. \\x. s) u s"))


def test_linear_head_needs_a_bound_head():
    assert find_redexes(t("\\x. x"), Rule.LINEAR_HEAD) == []
    assert find_redexes(t("(\\y. z) u"), Rule.LINEAR_HEAD) == []


def test_fuel_exhaustion():
    outcome = normalize(t("(\\x. x x) (\\x. x x)"), Rule.BETA, fuel=5)
    assert outcome.exhausted
    assert len(outcome.trace) == 5


def test_default_fuel():
    term = t("(\\x. x) y")
    assert default_fuel(term) == 10 * term.size**2
    assert default_fuel(term, typed=True) == 1_000_000


def test_reduce_primary_redexes(supply):
    assert reduce_primary_redexes(t("(\\y. (\\x. z x) t) s"), supply) == t("z t")


def test_reduce_primary_redexes_fuel(supply):
    with pytest.raises(FuelExhaustedError):
        reduce_primary_redexes(t("(\\y. (\\x. z x) t) s"), supply, fuel=0)


def test_simulate_beta_by_affine(supply):
    term = t("(\\x. x x) y")
    [redex] = find_redexes(term, Rule.BETA)
    trace = simulate_beta_by_affine(term, redex, supply)
    assert trace.rules == [Rule.LINEAR, Rule.LINEAR, Rule.GARBAGE]
    assert trace.final == t("y y")


def test_simulation_rejects_non_beta_redexes(supply):
    term = t("(\\x. z) y")
    [redex] = find_redexes(term, Rule.GARBAGE)
    with pytest.raises(ValueError):
        simulate_beta_by_affine(term, redex, supply)


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_steps_keep_distinct_names(seed):
    term = gen_term(GenConfig(seed=seed, max_size=15))
    supply = NameSupply.for_terms(term)
    for rule in (Rule.BETA, Rule.BETA_D, Rule.AFFINE):
        for redex in find_redexes(term, rule)[:3]:
            assert has_distinct_names(apply_step(term, redex, supply))


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_primary_reduction_clears_primary_redexes(seed):
    term = gen_term(GenConfig(seed=seed, max_size=12))
    supply = NameSupply.for_terms(term)
    try:
        result = reduce_primary_redexes(term, supply)
    except FuelExhaustedError:
        hyp.reject()
    assert primary_redexes(result) == []
