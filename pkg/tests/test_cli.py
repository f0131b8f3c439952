import pytest
from click.testing import CliRunner

from distlab import __version__
from distlab.cli import main
from distlab.core.syntax import alpha_eq
from distlab.utils.parser import parse_term


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), env={"DISTLAB_LOG_LEVEL": None, "DISTLAB_SEED": None})


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert __version__ in result.output


def test_parse_roundtrip(runner):
    result = invoke(runner, "parse", "(\\x. x)  y")
    assert result.exit_code == 0
    assert result.stdout == "(\\x. x) y\n"


def test_parse_rename(runner):
    result = invoke(runner, "parse", "--rename", "(\\x. x) x")
    assert result.exit_code == 0
    assert parse_term(result.stdout.strip()) != parse_term("(\\x. x) x")


def test_parse_error_is_usage_error(runner):
    result = invoke(runner, "parse", "\\x x")
    assert result.exit_code == 2


def test_missing_term(runner):
    result = invoke(runner, "reduce")
    assert result.exit_code == 2


def test_term_from_file(runner, tmp_path):
    source = tmp_path / "term.lam"
    source.write_text("(\\y. \\x. v) s t\n")
    result = invoke(runner, "canon", "--file", str(source))
    assert result.exit_code == 0
    assert result.stdout == "(\\y. (\\x. v) t) s\n"


def test_spine(runner):
    result = invoke(runner, "spine", "(\\y. \\x. v) s t")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "arg t",
        "arg s",
        "abs y",
        "abs x",
        "head v",
        "pair 0 3",
        "pair 1 2",
        "eta t/x",
        "eta s/y",
        "counts lambda=0 app=0 primary=2",
    ]


def test_spine_eta_only_for_e_contexts(runner):
    composite = invoke(runner, "spine", "(\\x. v) (f a)").stdout.splitlines()
    assert "eta (f a)/x" in composite
    open_binder = invoke(runner, "spine", "(\\x. \\y. x) u").stdout.splitlines()
    assert not [line for line in open_binder if line.startswith("eta")]


@pytest.mark.parametrize("rewrite", ["leftmost", "rightmost", "random"])
def test_canon(runner, rewrite):
    plain = invoke(runner, "canon", "(\\y. \\x. v) s t")
    rewritten = invoke(runner, "canon", "--rewrite", rewrite, "--seed", "3", "(\\y. \\x. v) s t")
    assert plain.stdout == rewritten.stdout == "(\\y. (\\x. v) t) s\n"


def test_canon_argument(runner):
    assert invoke(runner, "canon", "--arg=-2", "(\\y. \\x. v) s t").stdout == "s\n"
    assert invoke(runner, "canon", "--arg", "1", "(\\y. \\x. v) s t").exit_code == 2


def test_equiv_exit_codes(runner):
    left, right = "(\\y. (\\x. v) t) s", "(\\x. (\\y. v) s) t"
    sigma = invoke(runner, "equiv", left, right)
    assert sigma.exit_code == 0
    assert sigma.stdout == "true\n"
    deep = invoke(runner, "equiv", "--rel", "deep-e", left, right)
    assert deep.exit_code == 1
    assert deep.stdout == "false\n"
    unknown = invoke(runner, "equiv", "--rel", "beta", "--fuel", "5", "(\\x. x x) (\\x. x x)", "y")
    assert unknown.exit_code == 3
    assert unknown.stdout == "unknown\n"


def test_reduce_trace(runner):
    result = invoke(runner, "reduce", "--rule", "affine", "--trace", "(\\x. x x) y")
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 4
    assert [line.split()[2] for line in lines[:3]] == ["linear", "linear", "garbage"]
    for line in lines[:3]:
        parse_term(line.split(": ", 1)[1])
    assert lines[-1] == "y y"


def test_reduce_postpone(runner):
    result = invoke(runner, "reduce", "--rule", "affine", "--postpone", "(\\x. z) ((\\u. u) w)")
    assert result.exit_code == 0
    assert result.stdout == "z\n"
    assert invoke(runner, "reduce", "--postpone", "(\\x. x) y").exit_code == 2


def test_reduce_out_of_fuel(runner):
    result = invoke(runner, "reduce", "--fuel", "3", "(\\x. x x) (\\x. x x)")
    assert result.exit_code == 3


def test_typecheck(runner):
    result = invoke(runner, "typecheck", "--ctx", "f:o->o", "\\x:o. f x")
    assert result.exit_code == 0
    assert result.stdout == "o->o\n"
    assert invoke(runner, "typecheck", "\\x. x").exit_code == 2


def test_measure(runner):
    assert invoke(runner, "measure", "\\x:o. x").stdout == "2\n"
    assert invoke(runner, "measure", "--ctx", "y:o", "(\\x:o. x) y").stdout == "4\n"
    assert invoke(runner, "measure", "--ctx", "y:o", "--untuned", "y").stdout == "0\n"


def test_measure_trace(runner):
    result = invoke(runner, "measure", "--ctx", "y:o", "--trace", "(\\x:o. x) y")
    assert result.exit_code == 0
    assert result.stdout.splitlines() == ["start: 4", "step 1 beta @ /: 1"]


def test_check_list(runner):
    result = invoke(runner, "check", "--list")
    assert result.exit_code == 0
    assert "roundtrip" in result.stdout.splitlines()


def test_check_suite(runner):
    result = invoke(runner, "check", "--suite", "roundtrip", "--count", "5", "--seed", "2")
    assert result.exit_code == 0
    assert result.stdout.startswith("PASS roundtrip ")
    assert "failed=0" in result.stdout


def test_check_unknown_suite(runner):
    assert invoke(runner, "check", "--suite", "nope").exit_code == 2


def test_reduce_renames_before_stepping(runner):
    result = invoke(runner, "reduce", "--rule", "linear", "(\\y. \\x. y) x")
    assert result.exit_code == 0
    reduced = parse_term(result.stdout.strip())
    assert alpha_eq(reduced, parse_term("(\\y. \\z. x) x"))
    assert not alpha_eq(reduced, parse_term("(\\y. \\x. x) x"))


def test_equiv_renames_both_terms_apart(runner):
    result = invoke(runner, "equiv", "--rel", "beta", "(\\y. \\x. y) x", "\\z. x")
    assert result.exit_code == 0
    assert result.stdout == "true\n"
