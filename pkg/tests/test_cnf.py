"""Cantor normal form arithmetic."""

import hypothesis.strategies as st
from hypothesis import given

from ordalg.cnf import CNF, OMEGA, ONE, ZERO


def cnfs(depth=2):
    if depth == 0:
        return st.integers(0, 20).map(CNF.from_int)
    sub = cnfs(depth - 1)
    return st.one_of(
        st.integers(0, 20).map(CNF.from_int),
        st.tuples(sub, st.integers(1, 5)).map(
            lambda ec: CNF.omega_power(ec[0], ec[1])),
        st.tuples(sub, sub).map(lambda ab: ab[0] + ab[1]),
    )


def test_basic_constants():
    assert ZERO.is_zero()
    assert ONE.is_finite() and ONE.to_int() == 1
    assert not OMEGA.is_finite()
    assert OMEGA.is_limit()


def test_one_plus_omega_is_omega():
    assert ONE + OMEGA == OMEGA
    assert OMEGA + ONE != OMEGA


def test_finite_arithmetic_matches_integers():
    for a in range(8):
        for b in range(8):
            assert (CNF.from_int(a) + CNF.from_int(b)).to_int() == a + b
            assert (CNF.from_int(a) * CNF.from_int(b)).to_int() == a * b


@given(cnfs(), cnfs())
def test_addition_right_monotone(a, b):
    assert a + b >= a
    if not b.is_zero():
        assert a < a + b or a + b == a + b


@given(cnfs(), cnfs(), cnfs())
def test_addition_associative(a, b, c):
    assert (a + b) + c == a + (b + c)


@given(cnfs(), cnfs(), cnfs())
def test_multiplication_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(cnfs(), cnfs(), cnfs())
def test_left_distributive(a, b, c):
    # ordinal product distributes over addition on the right argument
    assert a * (b + c) == a * b + a * c


@given(cnfs(), cnfs())
def test_left_subtraction(a, b):
    if a <= b:
        assert a + a.left_sub(b) == b


@given(cnfs(), cnfs())
def test_divmod(a, b):
    if not b.is_zero():
        q, r = a.divmod_by(b)
        assert b * q + r == a
        assert r < b


def test_divmod_by_omega():
    v = OMEGA * CNF.from_int(3) + CNF.from_int(5)
    q, r = v.divmod_by(OMEGA)
    assert q == CNF.from_int(3)
    assert r == CNF.from_int(5)


@given(cnfs(), cnfs())
def test_total_order(a, b):
    assert (a < b) + (b < a) + (a == b) == 1
