import hypothesis as hyp
from hypothesis import strategies as st

from conftest import t
from distlab.core.generators import gen_term
from distlab.core.syntax import (
    NameSupply,
    alpha_eq,
    apply_env,
    ensure_distinct_names,
    free_vars,
    has_distinct_names,
    refresh,
    rename_apart,
    substitute,
)
from distlab.models import Binding, Environment, GenConfig, name


def test_free_vars():
    assert free_vars(t("\\x. x y")) == {name("y")}
    assert free_vars(t("(\\x. x) x")) == {name("x")}


def test_alpha_eq():
    assert alpha_eq(t("\\x. x"), t("\\y. y"))
    assert alpha_eq(t("\\x. \\y. x y z"), t("\\a. \\b. a b z"))
    assert not alpha_eq(t("\\x. x"), t("\\x. y"))
    assert not alpha_eq(t("\\x. \\y. x"), t("\\x. \\y. y"))


def test_alpha_eq_compares_annotations():
    assert not alpha_eq(t("\\x:o. x"), t("\\x:o->o. x"))


def test_distinct_names():
    assert has_distinct_names(t("\\x. \\y. x y z"))
    assert not has_distinct_names(t("\\x. \\x. x"))
    assert not has_distinct_names(t("(\\x. x) x"))
    assert not has_distinct_names(t("\\x. x"), t("\\x. x"))


def test_ensure_distinct_names_renames_clashes(supply):
    term = t("(\\x. x) (\\x. x x) x")
    renamed = ensure_distinct_names(term, supply)
    assert has_distinct_names(renamed)
    assert alpha_eq(renamed, term)


def test_ensure_distinct_names_keeps_good_terms(supply):
    term = t("\\x. \\y. x y")
    assert ensure_distinct_names(term, supply) is term


def test_rename_apart_works_across_terms(supply):
    left, right = t("\\x. y"), t("(\\y. y) x")
    renamed = rename_apart(left, right, supply=supply)
    assert has_distinct_names(*renamed)
    assert all(alpha_eq(a, b) for a, b in zip(renamed, (left, right)))
    assert free_vars(renamed[0]) == {name("y")}


def test_substitute_avoids_capture(supply):
    result = substitute(t("\\y. x y"), name("x"), t("y"), supply)
    assert free_vars(result) == {name("y")}
    assert not alpha_eq(result, t("\\y. y y"))
    assert alpha_eq(result, t("\\w. y w"))


def test_substitute_copies_are_fresh(supply):
    result = substitute(t("x x"), name("x"), t("\\u. u"), supply)
    assert alpha_eq(result, t("(\\u. u) (\\u. u)"))
    assert has_distinct_names(result)


def test_substitute_ignores_bound_occurrences(supply):
    term = t("\\x. x")
    assert substitute(term, name("x"), t("z"), supply) is term


def test_apply_env_later_pairs_act_on_earlier_terms(supply):
    env = Environment(
        pairs=(
            Binding(term=t("x2 x2"), variable=name("x1")),
            Binding(term=t("z"), variable=name("x2")),
        )
    )
    assert apply_env(t("f x1"), env, supply) == t("f (z z)")


def test_name_supply_is_increasing():
    supply = NameSupply.for_terms(t("\\x#7. x#7 y#2"))
    assert supply.fresh("x").index == 8
    assert supply.fresh("y").index == 9


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_refresh_is_alpha_equal(seed):
    term = gen_term(GenConfig(seed=seed, max_size=15))
    supply = NameSupply.for_terms(term)
    copy = refresh(term, supply)
    assert alpha_eq(copy, term)
    assert has_distinct_names(term, copy)
