"""Term construction, normalization, reversal, endpoint surgery."""

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from ordalg import (EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, Rev, Sum, detach_first, detach_last, fin,
                    has_first, has_last, normalize, pretty, reverse)
from ordalg.errors import NoEndpoint

ATOM_POOL = [EMPTY, ONE, FinChain(2), FinChain(3), OMEGA, OMEGA_STAR, ZETA,
             ETA, OMEGA1, OMEGA1_STAR, OMEGA2, OMEGA2_STAR, U_LINE]


def raw_terms(depth=3):
    if depth == 0:
        return st.sampled_from(ATOM_POOL)
    sub = raw_terms(depth - 1)
    return st.one_of(
        st.sampled_from(ATOM_POOL),
        st.lists(sub, min_size=2, max_size=3).map(lambda ps: Sum(tuple(ps))),
        st.tuples(sub, sub).map(lambda ab: LexProd(*ab)),
        sub.map(reverse),
    )


def test_fin():
    assert fin(0) == EMPTY
    assert fin(1) == ONE
    assert fin(5) == FinChain(5)


def test_finchain_rejects_small():
    with pytest.raises(ValueError):
        FinChain(1)


def test_normal_form_invariants(depth2_terms):
    for t in depth2_terms:
        if isinstance(t, Sum):
            assert len(t.parts) >= 2
            assert all(not isinstance(p, Sum) for p in t.parts)
            assert EMPTY not in t.parts
        if isinstance(t, LexProd):
            assert t.outer not in (EMPTY, ONE)
            assert t.inner not in (EMPTY, ONE)


@settings(max_examples=300)
@given(raw_terms())
def test_normalize_idempotent(t):
    n = normalize(t)
    assert normalize(n) == n


@settings(max_examples=300)
@given(raw_terms())
def test_reverse_involution(t):
    assert normalize(reverse(reverse(t))) == normalize(t)


def test_normalize_examples():
    # ordinal arithmetic folds into CNF shape
    assert normalize(Sum((ONE, OMEGA))) == OMEGA
    assert normalize(LexProd(FinChain(2), OMEGA)) == Sum((OMEGA, OMEGA))
    assert normalize(Rev(U_LINE)) == U_LINE
    # reversal of w + 1 is 1 + w*, which keeps its first point
    assert normalize(Rev(Sum((OMEGA, ONE)))) == Sum((ONE, OMEGA_STAR))
    # w* + w is the integers
    assert normalize(Sum((OMEGA_STAR, OMEGA))) == ZETA


def test_unit_and_zero_laws():
    assert normalize(LexProd(ONE, ETA)) == ETA
    assert normalize(LexProd(ETA, ONE)) == ETA
    assert normalize(LexProd(EMPTY, OMEGA1)) == EMPTY
    assert normalize(Sum((EMPTY, ZETA))) == ZETA


def test_rev_pushdown():
    assert normalize(reverse(OMEGA)) == OMEGA_STAR
    assert normalize(reverse(OMEGA1)) == OMEGA1_STAR
    assert normalize(reverse(ZETA)) == ZETA
    assert normalize(reverse(ETA)) == ETA
    assert normalize(reverse(OMEGA2)) == OMEGA2_STAR
    assert normalize(reverse(Sum((OMEGA1_STAR, OMEGA)))) == \
        Sum((OMEGA_STAR, OMEGA1))


def test_detach_last():
    assert detach_last(FinChain(3)) == FinChain(2)
    assert detach_last(OMEGA_STAR) == OMEGA_STAR
    assert detach_last(Sum((OMEGA, ONE))) == OMEGA
    assert detach_last(OMEGA1_STAR) == OMEGA1_STAR
    with pytest.raises(NoEndpoint):
        detach_last(OMEGA)


def test_detach_first():
    assert detach_first(FinChain(2)) == ONE
    assert detach_first(OMEGA) == OMEGA
    assert detach_first(Sum((ONE, ETA))) == ETA
    with pytest.raises(NoEndpoint):
        detach_first(ETA)


def test_detach_then_append(depth2_terms):
    # removing a successor-style last point and putting it back is neutral
    for t in depth2_terms:
        if isinstance(t, (FinChain,)) or (
                isinstance(t, Sum) and t.parts[-1] == ONE):
            assert normalize(Sum((detach_last(t), ONE))) == t


def test_endpoints():
    assert has_first(OMEGA) and not has_last(OMEGA)
    assert not has_first(OMEGA_STAR) and has_last(OMEGA_STAR)
    assert not has_first(U_LINE) and not has_last(U_LINE)
    assert has_first(Sum((ONE, ETA))) and not has_last(Sum((ONE, ETA)))
    assert has_first(LexProd(OMEGA, FinChain(2)))


def test_pretty_shapes():
    assert pretty(Sum((OMEGA1_STAR, OMEGA1))) == "w1* + w1"
    assert pretty(LexProd(OMEGA1, ETA)) == "w1*q"
    assert pretty(OMEGA2_STAR) == "rev(w2)"
    assert pretty(FinChain(7)) == "7"
