import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from conftest import t
from distlab.core.generators import GenerationError, gen_type, gen_typed_term
from distlab.core.reductions import normalize
from distlab.core.typecheck import (
    TypeMismatchError,
    UnannotatedBinderError,
    UnboundVariableError,
    check_subject_reduction,
    infer,
    is_typed,
)
from distlab.models import O, Arrow, GenConfig, Rule, arrow, name

CTX = {name("y"): O, name("f"): arrow(O, O)}


def test_infer():
    assert infer(t("\\x:o. x")) == Arrow(domain=O, codomain=O)
    assert infer(t("f y"), CTX) == O
    assert infer(t("\\g:o->o. \\x:o. g (g x)")) == arrow(arrow(O, O), O, O)


def test_unannotated_binder():
    with pytest.raises(UnannotatedBinderError) as info:
        infer(t("\\x. x"))
    assert info.value.binder == name("x")


def test_unbound_variable():
    with pytest.raises(UnboundVariableError):
        infer(t("z"), CTX)


def test_mismatch():
    with pytest.raises(TypeMismatchError):
        infer(t("y y"), CTX)
    with pytest.raises(TypeMismatchError):
        infer(t("f f"), CTX)
    assert not is_typed(t("f f"), CTX)


def test_subject_reduction_on_a_beta_trace():
    trace = normalize(t("(\\x:o. f x) y"), Rule.BETA).trace
    assert len(trace) == 1
    assert check_subject_reduction(trace, CTX)


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_generated_terms_have_their_target_type(seed):
    cfg = GenConfig(seed=seed, max_size=14)
    target = gen_type(cfg)
    try:
        term = gen_typed_term(cfg, target)
    except GenerationError:
        hyp.reject()
    assert infer(term, cfg.free_var_pool) == target


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_reductions_preserve_types(seed):
    cfg = GenConfig(seed=seed, max_size=12)
    try:
        term = gen_typed_term(cfg, O)
    except GenerationError:
        hyp.reject()
    for rule in (Rule.BETA, Rule.LINEAR_HEAD, Rule.AFFINE):
        assert check_subject_reduction(normalize(term, rule).trace, cfg.free_var_pool)
