import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from conftest import t
from distlab.core.generators import gen_e_context, gen_term
from distlab.core.spine import (
    NotAnEContextError,
    analyze_spine,
    decompose,
    e_context,
    eta,
    head_context,
    is_e_context,
    primary_redexes,
    spine_vars,
)
from distlab.models import GenConfig, name


def test_spine_word_and_matching():
    analysis = analyze_spine(t("(\\y. \\x. v) s t"))
    assert [item.kind for item in analysis.word] == ["arg", "arg", "abs", "abs"]
    assert analysis.head_var == name("v")
    assert set(analysis.matching) == {(1, 2), (0, 3)}
    assert (analysis.n_lambda, analysis.n_app, analysis.n_primary) == (0, 0, 2)


def test_primary_redexes_hole_nearest_first():
    assert primary_redexes(t("(\\y. \\x. v) s t")) == [(name("x"), t("t")), (name("y"), t("s"))]


def test_eta_orders_by_binder_from_the_hole():
    env = eta(head_context(t("(\\y. \\x. v) s t")))
    assert env.variables == [name("x"), name("y")]
    assert env.terms == [t("t"), t("s")]


def test_unmatched_items_counted():
    analysis = analyze_spine(t("\\z. (\\y. y) u w"))
    assert (analysis.n_lambda, analysis.n_app, analysis.n_primary) == (1, 1, 1)


def test_decomposition_blocks():
    d = decompose(t("\\z. (\\y. y) u w"))
    assert [len(block) for block in d.e_blocks] == [0, 0, 2]
    assert [item.binder for item in d.head_abs] == [name("z")]
    assert d.head_args == (t("w"),)
    assert d.head_var == name("y")


def test_head_context_of_variable_is_empty():
    assert len(head_context(t("x"))) == 0
    assert is_e_context(head_context(t("x")))


def test_unbalanced_context_is_rejected():
    with pytest.raises(NotAnEContextError):
        e_context(head_context(t("\\x. x")))
    with pytest.raises(NotAnEContextError):
        eta(head_context(t("f y")))


@hyp.given(seed=st.integers(min_value=0, max_value=2**32), size=st.integers(min_value=1, max_value=30))
def test_decomposition_reassembles(seed, size):
    term = gen_term(GenConfig(seed=seed, max_size=size))
    assert decompose(term).reassemble() == term


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_generated_e_contexts_are_balanced(seed):
    context, body = gen_e_context(GenConfig(seed=seed))
    assert is_e_context(context)
    assert len(eta(context)) * 2 == len(context)
    assert analyze_spine(body).head_var not in spine_vars(context)
