"""Surface syntax: tokenization, precedence, functions, round trip."""

import pytest

from ordalg import (ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2_STAR, OMEGA_STAR,
                    ONE, U_LINE, ZETA, FinChain, LexProd, ParseError, Sum,
                    parse, parse_with_flags, pretty, sample_terms)
from ordalg.parser import tokenize


def test_atoms():
    assert parse("q") == ETA
    assert parse("w1*") == OMEGA1_STAR
    assert parse("U") == U_LINE
    assert parse("0") == parse("0 + 0")
    assert parse("7") == FinChain(7)


def test_sum_and_product_precedence():
    assert parse("w1* + w1") == Sum((OMEGA1_STAR, OMEGA1))
    # product binds tighter: q + w1*q parses as q + (w1*q)
    assert parse("q + w1*q") == Sum((ETA, LexProd(OMEGA1, ETA)))
    assert parse("(q + w1)*q") == LexProd(Sum((ETA, OMEGA1)), ETA)


def test_parse_normalizes():
    assert pretty(parse("2*w")) == "w + w"
    assert parse("1 + w") == OMEGA
    assert parse("w* + w") == ZETA


def test_functions():
    assert parse("rev(w)") == OMEGA_STAR
    assert parse("rev(w2)") == OMEGA2_STAR
    assert pretty(parse("cc(w1 + 1)")) == "2"
    assert pretty(parse("fc(z)")) == "1"
    assert pretty(parse("mulw(q, w1)")) == "q"
    assert pretty(parse("mulf(q, w)")) == "q"


def test_flags_only_for_outer_condensation():
    term, flags = parse_with_flags("cc(w1 + 1)")
    assert pretty(term) == "2" and flags == (True, True)
    assert parse_with_flags("w1")[1] is None
    assert parse_with_flags("cc(w1) + 1")[1] is None


def test_greedy_star_tokenization():
    # a trailing * belongs to the atom unless an operand follows
    assert parse("w*") == OMEGA_STAR
    assert parse("w* + 1") == OMEGA_STAR  # w* + 1 collapses to w*
    assert parse("w*q") == LexProd(OMEGA, ETA)
    assert parse("w1*w") == OMEGA1  # w copies inside each of w1 points
    assert [t.text for t in tokenize("w*w*")] == ["w", "*", "w*", ""]


def test_errors_carry_positions():
    with pytest.raises(ParseError) as e:
        parse("cc(")
    assert e.value.position == 3
    with pytest.raises(ParseError):
        parse("w q")
    with pytest.raises(ParseError):
        parse("mulw(q)")
    with pytest.raises(ParseError):
        parse("foo(1)")
    with pytest.raises(ParseError):
        parse("1 + + 2")
    with pytest.raises(ParseError):
        parse("")


def test_round_trip_on_normal_forms(depth2_terms):
    for t in depth2_terms:
        assert parse(pretty(t)) == t


def test_round_trip_depth3_sample():
    for t in sample_terms(3, 300, seed=7):
        assert parse(pretty(t)) == t
