import re
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lazyvor.errors import SpecError
from lazyvor.sources.expr import BinOp, Neg, Num, Var, evaluate, parse_expr, to_text


def test_precedence_and_associativity():
    assert parse_expr("1 - 2 - 3") == BinOp("-", BinOp("-", Num(1), Num(2)), Num(3))
    assert parse_expr("1 + 2 * n") == BinOp("+", Num(1), BinOp("*", Num(2), Var("n")))
    assert parse_expr("-n * 2") == BinOp("*", Neg(Var("n")), Num(2))
    assert parse_expr("8 / 4 / 2", "k") == BinOp("/", BinOp("/", Num(8), Num(4)), Num(2))


def test_evaluation_is_exact():
    assert evaluate(parse_expr("1 - 1/n", "n"), 2) == Fraction(1, 2)
    assert evaluate(parse_expr("-(n + 1) * 3 / 9", "n"), 2) == -1
    assert evaluate(parse_expr("8 / 4 / 2"), 0) == 1
    with pytest.raises(ZeroDivisionError):
        evaluate(parse_expr("1 / n", "n"), 0)


def test_syntax_error_points_at_the_offending_token():
    with pytest.raises(SpecError) as err:
        parse_expr("1 - / n", "n")
    assert (err.value.line, err.value.column) == (1, 5)
    assert "'/'" in str(err.value)


@pytest.mark.parametrize("text,col", [("(1 + n", 7), ("n n", 3), ("2 $ n", 3), ("", 1), ("1 +", 4)])
def test_more_syntax_errors(text, col):
    with pytest.raises(SpecError) as err:
        parse_expr(text, "n")
    assert err.value.column == col


def test_unknown_identifier():
    with pytest.raises(SpecError) as err:
        parse_expr("n + m", "n")
    assert err.value.column == 5


def test_multiline_positions():
    with pytest.raises(SpecError) as err:
        parse_expr("n +\n  * 2", "n")
    assert (err.value.line, err.value.column) == (2, 3)


def trees():
    leaves = st.one_of(st.integers(0, 20).map(Num), st.just(Var("n")))
    return st.recursive(
        leaves,
        lambda sub: st.one_of(
            sub.map(Neg),
            st.tuples(st.sampled_from("+-*/"), sub, sub).map(lambda t: BinOp(*t)),
        ),
        max_leaves=12,
    )


@settings(max_examples=200, deadline=None)
@given(trees())
def test_pretty_print_roundtrip(tree):
    assert parse_expr(to_text(tree), "n") == tree


def _python_value(text, k):
    # independent evaluation: Python's own parser over Fraction literals
    src = re.sub(r"\d+", lambda m: f"Fraction({m.group()})", re.sub(r"\bn\b", "K", text))
    return eval(src, {"Fraction": Fraction, "K": Fraction(k)})


@settings(max_examples=200, deadline=None)
@given(trees(), st.integers(-5, 5))
def test_evaluation_matches_python(tree, k):
    text = to_text(tree)
    try:
        expected = _python_value(text, k)
    except ZeroDivisionError:
        with pytest.raises(ZeroDivisionError):
            evaluate(tree, k)
        return
    assert evaluate(tree, k) == expected
