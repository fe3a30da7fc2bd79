"""The class-index map and its agreement with the interval oracle."""

from ordalg import (Level, class_index, compare_points, interval_is_small,
                    normalize, oracle_report, parse, reverse, sample_points)
from ordalg.cnf import CNF, ZERO
from ordalg.cnf import ONE as CNF1
from ordalg.ordinal import OrdinalValue
from ordalg.quotientmap import encode_position, position_of_code

CC = Level.COUNTABLE
FC = Level.FINITE


def test_position_round_trip():
    t = parse("w1 + w*w + 3")
    pts = sample_points(t, 40, seed=9)
    for p in pts:
        v = position_of_code(t, p)
        if v is not None:
            assert encode_position(t, v) == p


def test_ordinal_class_indices():
    w1 = parse("w1")
    omega = CNF.omega_power(CNF1)
    # countable level: all of w1 is one class
    assert class_index(w1, ZERO, CC) == class_index(w1, omega, CC)
    # finite level: classes are the w-blocks
    assert class_index(w1, ZERO, FC) == class_index(w1, CNF.from_int(7), FC)
    assert class_index(w1, ZERO, FC) != class_index(w1, omega, FC)
    assert class_index(w1, omega, FC) < \
        class_index(w1, omega * CNF.from_int(2), FC)


def test_sum_with_seam():
    # in w1* + w1 everything is one countable-condensation class
    t = parse("w1* + w1")
    pts = sample_points(t, 12, seed=0)
    idx = {class_index(t, p, CC) for p in pts}
    assert len(idx) == 1


def test_agreement_sample(depth2_terms):
    for t in depth2_terms[:40]:
        for level in (CC, FC):
            rep = oracle_report(t, level, pairs=120, seed=4)
            assert rep["mismatches"] == [], (str(t), level)


def test_classes_are_intervals(depth2_terms):
    # between two points of one class, every point is in that class
    import functools
    for t in depth2_terms[:40]:
        pts = sorted(
            sample_points(t, 10, seed=6),
            key=functools.cmp_to_key(lambda a, b: compare_points(t, a, b)))
        for level in (CC, FC):
            idx = [class_index(t, p, level) for p in pts]
            for i in range(len(pts)):
                for j in range(i + 2, len(pts)):
                    if idx[i] == idx[j]:
                        assert all(k == idx[i] for k in idx[i:j])
