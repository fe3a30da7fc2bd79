"""Cardinality, cofinality, end-segment flags, right-identity decision."""

from ordalg import (ALEPH0, ALEPH1, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA_STAR, ONE, U_LINE, ZETA, CardClass, Cof, FinChain,
                    Level, LexProd, Sum, card_of, check_tfae, cofinality,
                    coinitiality, condenses_to_one, is_small, parse, profile,
                    right_identity, small_head, small_tail)
from ordalg.classify import ALEPH2PLUS


def test_card_arithmetic():
    assert CardClass(0, 2) + CardClass(0, 3) == CardClass(0, 5)
    assert CardClass(0, 4) * ALEPH0 == ALEPH0
    assert ALEPH0 + ALEPH1 == ALEPH1
    assert ALEPH1 * ALEPH0 == ALEPH1
    assert CardClass(0, 0) * ALEPH1 == CardClass(0, 0)
    assert ALEPH0 < ALEPH1 < ALEPH2PLUS


def test_card_of_terms():
    assert card_of(FinChain(9)) == CardClass(0, 9)
    assert card_of(ZETA) == ALEPH0
    assert card_of(U_LINE) == ALEPH1
    assert card_of(OMEGA2) == ALEPH2PLUS
    assert card_of(Sum((OMEGA, OMEGA1))) == ALEPH1
    assert card_of(LexProd(OMEGA1, ETA)) == ALEPH1


def test_smallness_levels():
    assert is_small(ALEPH0, Level.COUNTABLE)
    assert not is_small(ALEPH0, Level.FINITE)
    assert not is_small(ALEPH1, Level.COUNTABLE)
    assert is_small(CardClass(0, 17), Level.FINITE)


def test_cofinality():
    assert cofinality(OMEGA) == Cof.OMEGA
    assert cofinality(OMEGA_STAR) == Cof.ONE
    assert cofinality(OMEGA1) == Cof.OMEGA1
    assert cofinality(U_LINE) == Cof.OMEGA1
    assert cofinality(Sum((OMEGA1, ETA))) == Cof.OMEGA
    assert cofinality(LexProd(OMEGA1, OMEGA_STAR)) == Cof.OMEGA1
    assert cofinality(LexProd(OMEGA_STAR, OMEGA)) == Cof.OMEGA
    assert coinitiality(OMEGA1_STAR) == Cof.OMEGA1
    assert coinitiality(ZETA) == Cof.OMEGA
    assert str(Cof.OMEGA1) == "w1"


def test_small_ends():
    assert small_head(OMEGA1, Level.COUNTABLE)
    assert not small_tail(OMEGA1, Level.COUNTABLE)
    assert not small_head(U_LINE, Level.COUNTABLE)
    assert small_tail(ETA, Level.COUNTABLE)  # the whole order is small
    assert small_tail(Sum((OMEGA1, ETA)), Level.COUNTABLE)
    assert not small_tail(Sum((ETA, OMEGA1)), Level.COUNTABLE)
    assert small_tail(LexProd(OMEGA1_STAR, OMEGA_STAR), Level.FINITE)
    assert not small_tail(LexProd(OMEGA1, OMEGA_STAR), Level.FINITE)


def test_condenses_to_one():
    assert condenses_to_one(OMEGA1, Level.COUNTABLE)
    assert condenses_to_one(U_LINE, Level.COUNTABLE)
    assert not condenses_to_one(OMEGA2, Level.COUNTABLE)
    assert condenses_to_one(ZETA, Level.FINITE)
    assert not condenses_to_one(ETA, Level.FINITE)


def test_right_identity():
    assert right_identity(OMEGA1, Level.COUNTABLE)
    assert right_identity(parse("w1* + w1"), Level.COUNTABLE)
    assert not right_identity(ETA, Level.COUNTABLE)  # small, so absorbed
    assert right_identity(OMEGA, Level.FINITE)
    assert right_identity(ZETA, Level.FINITE)
    assert not right_identity(OMEGA, Level.COUNTABLE)


def test_profile_json_shape():
    doc = profile(U_LINE, Level.COUNTABLE).to_json()
    assert doc["card"] == "aleph1"
    assert doc["rightIdentity"] is True
    assert set(doc) == {"card", "cofinality", "coinitiality", "hasFirst",
                        "hasLast", "smallHead", "smallTail",
                        "condensesToOne", "rightIdentity"}


def test_tfae_examples():
    for text in ("w1", "w1*", "U", "w1* + w1", "w1* + q", "q + w1",
                 "w1*q", "q", "w", "w2", "z + w1"):
        assert check_tfae(parse(text)).consistent


def test_tfae_depth2(depth2_terms):
    for t in depth2_terms:
        assert check_tfae(t).consistent
