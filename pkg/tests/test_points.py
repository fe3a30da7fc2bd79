"""Point codes, comparison, the interval-cardinality oracle."""

from fractions import Fraction

import pytest

from ordalg import (ALEPH0, ALEPH1, ETA, OMEGA, OMEGA1, ONE, SPINE, U_LINE,
                    ZETA, CardClass, Level, Side, Sum, UPoint, cantor_embed,
                    compare_points, head_card, interval_class,
                    interval_is_small, sample_points, tail_card)
from ordalg.cnf import CNF, ZERO
from ordalg.cnf import ONE as CNF1
from ordalg.points import EQ, LT, reflect_code, validate_code

U = U_LINE
A0 = ZERO
A1 = CNF1


def up(side, index, slot):
    return UPoint(side, index, slot)


def test_u_ordering_spine_and_blocks():
    # ... Q(-1) < -u_1 < Q(-0) < -u_0 < Q(mid) < u_0 < Q(0) < u_1 ...
    q_neg1 = up(Side.NEG, A1, Fraction(0))
    neg1 = up(Side.NEG, A1, SPINE)
    q_neg0 = up(Side.NEG, A0, Fraction(0))
    neg0 = up(Side.NEG, A0, SPINE)
    mid = up(Side.MID, A0, Fraction(0))
    pos0 = up(Side.POS, A0, SPINE)
    q_pos0 = up(Side.POS, A0, Fraction(0))
    pos1 = up(Side.POS, A1, SPINE)
    chain = [q_neg1, neg1, q_neg0, neg0, mid, pos0, q_pos0, pos1]
    for i in range(len(chain)):
        for j in range(len(chain)):
            want = (i > j) - (i < j)
            assert compare_points(U, chain[i], chain[j]) == want


def test_u_block_rationals_sorted():
    a = up(Side.POS, A0, Fraction(1, 3))
    b = up(Side.POS, A0, Fraction(1, 2))
    assert compare_points(U, a, b) == LT
    c = up(Side.NEG, A0, Fraction(-1))
    d = up(Side.NEG, A0, Fraction(2))
    assert compare_points(U, c, d) == LT


def test_reflect_involution_and_antitone(depth2_terms):
    from ordalg import normalize, reverse
    for t in depth2_terms[:80]:
        rt = normalize(reverse(t))
        pts = sample_points(t, 10, seed=1)
        for p in pts:
            q = reflect_code(t, p)
            validate_code(rt, q)
            assert reflect_code(rt, q) == p
        for p in pts:
            for q in pts:
                assert compare_points(t, p, q) == \
                    -compare_points(rt, reflect_code(t, p),
                                    reflect_code(t, q))


def test_head_and_tail_cards():
    # head and tail segments include the point itself
    assert head_card(OMEGA, 5) == CardClass(0, 6)
    assert tail_card(OMEGA, 5) == ALEPH0
    assert head_card(OMEGA1, CNF.omega_power(CNF1)) == ALEPH0
    assert tail_card(OMEGA1, CNF.omega_power(CNF1)) == ALEPH1
    # every end segment of U is uncountable
    assert head_card(U, up(Side.MID, A0, Fraction(0))) == ALEPH1
    assert tail_card(U, up(Side.MID, A0, Fraction(0))) == ALEPH1


def test_interval_class_examples():
    assert interval_class(ZETA, -3, 4) == CardClass(0, 8)
    assert interval_class(ETA, Fraction(0), Fraction(1)) == ALEPH0
    assert interval_class(OMEGA1, ZERO, CNF.omega_power(CNF1)) == ALEPH0
    # any proper interval of U is countable
    p = up(Side.NEG, A1, SPINE)
    q = up(Side.POS, A1, Fraction(7))
    assert interval_class(U, p, q) == ALEPH0
    t = Sum((OMEGA1, ONE))
    assert interval_class(t, (0, ZERO), (1, 0)) == ALEPH1


def test_interval_laws(depth2_terms):
    for t in depth2_terms[:60]:
        pts = sample_points(t, 8, seed=5)
        for p in pts:
            assert interval_class(t, p, p) == CardClass(0, 1)
            for q in pts:
                assert interval_class(t, p, q) == interval_class(t, q, p)
        spts = sorted(pts, key=_key(t, pts))
        for i in range(len(spts) - 2):
            a, b, c = spts[i], spts[i + 1], spts[i + 2]
            for level in (Level.FINITE, Level.COUNTABLE):
                if interval_is_small(t, a, c, level):
                    assert interval_is_small(t, a, b, level)
                    assert interval_is_small(t, b, c, level)


def _key(t, pts):
    import functools
    return functools.cmp_to_key(lambda a, b: compare_points(t, a, b))


def test_sample_points_distinct_and_valid(depth2_terms):
    for t in depth2_terms[:80]:
        pts = sample_points(t, 12, seed=2)
        for p in pts:
            validate_code(t, p)
        for i, p in enumerate(pts):
            for q in pts[i + 1:]:
                assert compare_points(t, p, q) != EQ
        assert pts == sample_points(t, 12, seed=2)


def test_cantor_embed_preserves_order():
    import random
    rng = random.Random(11)
    for _ in range(20):
        vals = rng.sample(range(-1000, 1000), rng.randrange(2, 60))
        imgs = cantor_embed(vals, lambda a, b: (a > b) - (a < b))
        assert len(imgs) == len(vals)
        for i in range(len(vals)):
            for j in range(len(vals)):
                assert ((imgs[i] < imgs[j]) == (vals[i] < vals[j]))
