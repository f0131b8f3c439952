import hypothesis as hyp
import pytest
from hypothesis import strategies as st

from distlab.core.generators import gen_term, gen_typed_term
from distlab.models import O, Abs, App, Arrow, GenConfig, Name, Var, name
from distlab.utils.parser import ParseError, parse_context, parse_term, parse_type, print_term


def test_abstraction_body_extends_right():
    assert parse_term("\\x. x y") == Abs(
        binder=name("x"), body=App(fun=Var(name=name("x")), arg=Var(name=name("y")))
    )


def test_application_is_left_associative():
    assert parse_term("f a b") == App(
        fun=App(fun=Var(name=name("f")), arg=Var(name=name("a"))), arg=Var(name=name("b"))
    )


def test_indexed_names():
    parsed = parse_term("x#3")
    assert parsed == Var(name=Name(base="x", index=3))
    assert str(parsed) == "x#3"


def test_annotated_binder():
    parsed = parse_term("\\x:o->o. x")
    assert parsed.annotation == Arrow(domain=O, codomain=O)
    assert str(parsed) == "\\x:o->o. x"


@pytest.mark.parametrize(
    "text",
    [
        "(\\y. \\x. v) s t",
        "f (g h)",
        "\\x. \\y. x (y x)",
        "(\\x:(o->o)->o. x) (\\f:o->o. f z)",
        "x#1 (\\u#2. u#2)",
    ],
)
def test_print_is_stable(text):
    assert print_term(parse_term(text)) == text


@pytest.mark.parametrize("text", ["\\x x", "(x", "x)", "", "x#", "\\. x", "x $ y"])
def test_malformed_terms(text):
    with pytest.raises(ParseError):
        parse_term(text)


def test_parse_error_carries_position():
    with pytest.raises(ParseError) as info:
        parse_term("f (x")
    assert info.value.position == 4


def test_types_are_right_associative():
    assert parse_type("o->o->o") == Arrow(domain=O, codomain=Arrow(domain=O, codomain=O))
    assert str(parse_type("(o->o)->o")) == "(o->o)->o"


def test_context():
    assert parse_context("x:o,f:o->o") == {name("x"): O, name("f"): Arrow(domain=O, codomain=O)}
    assert parse_context("") == {}


def test_context_rejects_duplicates():
    with pytest.raises(ParseError):
        parse_context("x:o,x:o->o")


@hyp.given(seed=st.integers(min_value=0, max_value=2**32), size=st.integers(min_value=1, max_value=30))
def test_untyped_roundtrip(seed, size):
    term = gen_term(GenConfig(seed=seed, max_size=size))
    assert parse_term(print_term(term)) == term


@hyp.given(seed=st.integers(min_value=0, max_value=2**32))
def test_typed_roundtrip(seed):
    term = gen_typed_term(GenConfig(seed=seed, max_size=15), Arrow(domain=O, codomain=O))
    assert parse_term(print_term(term)) == term
