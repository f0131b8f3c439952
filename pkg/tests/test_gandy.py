import hypothesis as hyp
from hypothesis import strategies as st

from conftest import t
from distlab.core.gandy import (
    bottom,
    bump,
    collapse,
    default_valuation,
    interpret,
    is_increasing,
    measure,
    measure_trace,
    precedes,
)
from distlab.core.generators import GenerationError, gen_typed_term
from distlab.core.reductions import normalize
from distlab.models import O, GenConfig, NatVal, Rule, arrow, name

O_TO_O = arrow(O, O)


def test_measure_golden_values():
    valuation = default_valuation({name("y"): O})
    assert measure(t("\\x:o. x"), {}) == 2
    assert measure(t("(\\x:o. x) y"), valuation) == 4
    assert measure(t("y"), valuation) == 1


def test_untuned_variables():
    valuation = default_valuation({name("y"): O})
    assert measure(t("y"), valuation, tuned=False) == 0


def test_bottom_and_collapse():
    assert bottom(O) == NatVal(n=0)
    assert bottom(O_TO_O)(NatVal(n=3)) == NatVal(n=3)
    assert collapse(O_TO_O, bottom(O_TO_O)) == 0
    assert collapse(O_TO_O, bump(O_TO_O, bottom(O_TO_O), 2)) == 2


def test_order():
    assert precedes(O, NatVal(n=1), NatVal(n=2))
    assert not precedes(O, NatVal(n=2), NatVal(n=2))
    assert precedes(O_TO_O, bottom(O_TO_O), bump(O_TO_O, bottom(O_TO_O), 1))


def test_interpretations_are_increasing():
    assert is_increasing(O_TO_O, bottom(O_TO_O))
    assert is_increasing(O_TO_O, interpret(t("\\x:o. x"), {}))


def test_beta_step_decreases_the_measure():
    ctx = {name("y"): O}
    trace = normalize(t("(\\x:o. x) y"), Rule.BETA).trace
    assert measure_trace(trace, ctx) == [4, 1]


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_measure_decreases_along_beta(seed):
    cfg = GenConfig(seed=seed, max_size=12)
    try:
        term = gen_typed_term(cfg, O)
    except GenerationError:
        hyp.reject()
    values = measure_trace(normalize(term, Rule.BETA).trace, cfg.free_var_pool)
    assert all(a > b for a, b in zip(values, values[1:]))
