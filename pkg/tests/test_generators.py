import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from distlab.core.generators import GenerationError, enumerate_terms, gen_e_term, gen_term, gen_type, gen_typed_term
from distlab.core.reductions import find_redexes
from distlab.core.syntax import free_vars, has_distinct_names
from distlab.models import O, GenConfig, Rule, Var, name


def test_same_config_same_term():
    cfg = GenConfig(seed=42, max_size=25)
    assert gen_term(cfg) == gen_term(cfg)
    assert gen_e_term(cfg) == gen_e_term(cfg)


def test_seeds_give_varied_terms():
    terms = {str(gen_term(GenConfig(seed=seed))) for seed in range(1, 101)}
    assert len(terms) >= 50


def test_case_configs_are_independent():
    cfg = GenConfig(seed=3)
    assert cfg.for_case(0) == cfg.for_case(0)
    assert cfg.for_case(0).seed != cfg.for_case(1).seed


def test_tiny_size_needs_a_free_variable():
    with pytest.raises(GenerationError):
        gen_term(GenConfig(max_size=1, free_var_pool={}))


def test_empty_pool_gives_closed_terms():
    term = gen_term(GenConfig(seed=5, max_size=12, free_var_pool={}))
    assert free_vars(term) == frozenset()


def test_e_terms_need_a_free_variable():
    with pytest.raises(GenerationError):
        gen_e_term(GenConfig(free_var_pool={}))


def test_uninhabited_target_is_reported():
    with pytest.raises(GenerationError):
        gen_typed_term(GenConfig(max_size=1, free_var_pool={}), O)


def test_enumeration_counts():
    assert len(list(enumerate_terms(3))) == 3
    assert len(list(enumerate_terms(3, [name("y")]))) == 7


def test_enumeration_terms_are_distinct_and_well_named():
    terms = list(enumerate_terms(5))
    assert len({str(term) for term in terms}) == len(terms)
    assert all(has_distinct_names(term) and not free_vars(term) for term in terms)


@hyp.given(seed=st.integers(min_value=0, max_value=2**64 - 1), size=st.integers(min_value=1, max_value=40))
def test_size_bound_and_names(seed, size):
    cfg = GenConfig(seed=seed, max_size=size)
    term = gen_term(cfg)
    assert term.size <= size
    assert has_distinct_names(term)
    assert free_vars(term) <= set(cfg.free_var_pool)


@hyp.given(seed=st.integers(min_value=0, max_value=2**32), depth=st.integers(min_value=0, max_value=4))
def test_type_depth_bound(seed, depth):
    assert gen_type(GenConfig(seed=seed, max_type_depth=depth)).depth <= depth


def test_untyped_terms_fill_the_size_bound():
    terms = [gen_term(GenConfig(seed=seed, max_size=20)) for seed in range(1, 101)]
    assert not [term for term in terms if isinstance(term, Var)]
    assert sum(term.size for term in terms) / len(terms) >= 20 / 4


def test_typed_terms_usually_contain_a_redex():
    terms = []
    for seed in range(1, 101):
        cfg = GenConfig(seed=seed, max_size=20)
        terms.append(gen_typed_term(cfg, gen_type(cfg)))
    assert sum(1 for term in terms if isinstance(term, Var)) <= 10
    assert sum(1 for term in terms if find_redexes(term, Rule.BETA_D)) >= 50
