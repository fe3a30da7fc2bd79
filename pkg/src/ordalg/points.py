"""Concrete points of a term and the interval-cardinality oracle.

Every term denotes an actual linear order; a PointCode addresses one of its
elements:

  * naturals for ``1``, finite chains and ``w`` (``w*`` counts from the top);
  * integers for ``z``, exact rationals for ``q``;
  * countable CNF ordinals for ``w1`` (``w1*`` counts from the top);
  * pairs ``(delta, rho)`` of CNF for ``w2``, denoting ``w1*delta + rho`` with
    ``delta`` restricted to countable codes (``rev(w2)`` from the top);
  * a :class:`UPoint` for ``U``;
  * ``(part index, sub-code)`` for sums, ``(outer, inner)`` for products.

``interval_class`` classifies the cardinality of a closed interval directly
from this point semantics, with no reference to the condensation rules; the
tests use it as the independent oracle for the condensation engine.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Tuple, Union

from .classify import (ALEPH0, ALEPH1, ALEPH2PLUS, FIN1, CardClass, card_of,
                       is_small)
from .cnf import CNF, OMEGA as OMEGA_CNF, ZERO
from .cnf import ONE as CNF1
from .errors import InvalidCode
from .normalize import has_first, has_last
from .terms import (EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, OrderTerm, Sum, reverse)

LT, EQ, GT = -1, 0, 1


class Side(enum.IntEnum):
    NEG = -1
    MID = 0
    POS = 1


class _Spine:
    """Sentinel marking a spine point u_alpha of U."""

    _instance: Optional["_Spine"] = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "SPINE"


SPINE = _Spine()


@dataclass(frozen=True)
class UPoint:
    """A point of U: the spine point u_alpha / -u_alpha (slot SPINE), or the
    rational ``slot`` of the block Q(alpha) / Q(-alpha) / Q(mid)."""

    side: Side
    index: CNF
    slot: Union[_Spine, Fraction]

    def __post_init__(self):
        if self.side is Side.MID:
            if not self.index.is_zero() or not isinstance(self.slot, Fraction):
                raise InvalidCode("the middle block has rational slots at index 0")
        elif not (self.slot is SPINE or isinstance(self.slot, Fraction)):
            raise InvalidCode(f"bad slot {self.slot!r}")


PointCode = Union[int, Fraction, CNF, UPoint, Tuple]


# -- validity -------------------------------------------------------------

def validate_code(t: OrderTerm, p: PointCode) -> None:
    """Raise InvalidCode unless ``p`` denotes an element of ``t``."""
    if t == ONE:
        if p != 0:
            raise InvalidCode(f"1 has only the point 0, not {p!r}")
    elif isinstance(t, FinChain):
        if not (isinstance(p, int) and 0 <= p < t.n):
            raise InvalidCode(f"{t} has points 0..{t.n - 1}, not {p!r}")
    elif t in (OMEGA, OMEGA_STAR):
        if not (isinstance(p, int) and p >= 0):
            raise InvalidCode(f"{t} points are naturals, not {p!r}")
    elif t == ZETA:
        if not isinstance(p, int):
            raise InvalidCode(f"z points are integers, not {p!r}")
    elif t == ETA:
        if not isinstance(p, Fraction):
            raise InvalidCode(f"q points are Fractions, not {p!r}")
    elif t in (OMEGA1, OMEGA1_STAR):
        if not isinstance(p, CNF):
            raise InvalidCode(f"{t} points are countable CNF codes, not {p!r}")
    elif t in (OMEGA2, OMEGA2_STAR):
        if not (isinstance(p, tuple) and len(p) == 2
                and all(isinstance(c, CNF) for c in p)):
            raise InvalidCode(f"{t} points are (delta, rho) CNF pairs, not {p!r}")
    elif t == U_LINE:
        if not isinstance(p, UPoint):
            raise InvalidCode(f"U points are UPoints, not {p!r}")
    elif isinstance(t, Sum):
        if not (isinstance(p, tuple) and len(p) == 2
                and isinstance(p[0], int) and 0 <= p[0] < len(t.parts)):
            raise InvalidCode(f"sum points are (part, sub), not {p!r}")
        validate_code(t.parts[p[0]], p[1])
    elif isinstance(t, LexProd):
        if not (isinstance(p, tuple) and len(p) == 2):
            raise InvalidCode(f"product points are (outer, inner), not {p!r}")
        validate_code(t.outer, p[0])
        validate_code(t.inner, p[1])
    else:
        raise InvalidCode(f"{t} has no points" if t == EMPTY
                          else f"unknown term {t!r}")


# -- comparison -----------------------------------------------------------

def _cmp(a, b) -> int:
    return LT if a < b else GT if b < a else EQ


def _cmp_upoint(p: UPoint, q: UPoint) -> int:
    if p.side != q.side:
        return _cmp(p.side, q.side)
    if p.side is Side.MID:
        return _cmp(p.slot, q.slot)
    # (alpha, SPINE) < (alpha, rational) < (alpha + 1, SPINE) on the POS
    # side; the NEG side is the mirror image, blocks sitting below spines
    rank_p = (p.index, 0 if p.slot is SPINE else 1)
    rank_q = (q.index, 0 if q.slot is SPINE else 1)
    if p.side is Side.NEG:
        # mirror image: ascending means descending index, and the block
        # Q(-alpha) sits just below the spine point -u_alpha
        rank_p = (p.index, 0 if p.slot is SPINE else 1)
        rank_q = (q.index, 0 if q.slot is SPINE else 1)
        if rank_p != rank_q:
            return _cmp(rank_q, rank_p)
    elif rank_p != rank_q:
        return _cmp(rank_p, rank_q)
    if p.slot is SPINE:
        return EQ
    return _cmp(p.slot, q.slot)


def compare_points(t: OrderTerm, p: PointCode, q: PointCode) -> int:
    """Total order on valid codes; returns LT, EQ or GT."""
    validate_code(t, p)
    validate_code(t, q)
    return _compare(t, p, q)


def _compare(t: OrderTerm, p, q) -> int:
    if t in (OMEGA_STAR, OMEGA1_STAR):
        return _cmp(q, p)
    if t == OMEGA2_STAR:
        return _cmp(q, p)
    if t == U_LINE:
        return _cmp_upoint(p, q)
    if isinstance(t, Sum):
        if p[0] != q[0]:
            return _cmp(p[0], q[0])
        return _compare(t.parts[p[0]], p[1], q[1])
    if isinstance(t, LexProd):
        c = _compare(t.outer, p[0], q[0])
        return c if c != EQ else _compare(t.inner, p[1], q[1])
    return _cmp(p, q)


# -- reflection -----------------------------------------------------------

def reflect_code(t: OrderTerm, p: PointCode) -> PointCode:
    """The code of the same point inside ``reverse(t)``."""
    if t == ONE or isinstance(t, FinChain):
        return (0 if t == ONE else t.n - 1 - p)
    if t in (OMEGA, OMEGA_STAR, OMEGA1, OMEGA1_STAR, OMEGA2, OMEGA2_STAR):
        return p  # from-the-bottom and from-the-top codes swap roles
    if t == ZETA:
        return -p
    if t == ETA:
        return -p
    if t == U_LINE:
        slot = p.slot if p.slot is SPINE else -p.slot
        return UPoint(Side(-p.side), p.index, slot)
    if isinstance(t, Sum):
        i, sub = p
        return (len(t.parts) - 1 - i, reflect_code(t.parts[i], sub))
    if isinstance(t, LexProd):
        return (reflect_code(t.outer, p[0]), reflect_code(t.inner, p[1]))
    raise InvalidCode(f"cannot reflect {p!r} in {t}")


def is_last_code(t: OrderTerm, p: PointCode) -> bool:
    if t == ONE:
        return True
    if isinstance(t, FinChain):
        return p == t.n - 1
    if t in (OMEGA_STAR,):
        return p == 0
    if t == OMEGA1_STAR:
        return p == ZERO
    if t == OMEGA2_STAR:
        return p == (ZERO, ZERO)
    if isinstance(t, Sum):
        return p[0] == len(t.parts) - 1 and is_last_code(t.parts[-1], p[1])
    if isinstance(t, LexProd):
        return is_last_code(t.outer, p[0]) and is_last_code(t.inner, p[1])
    return False


def is_first_code(t: OrderTerm, p: PointCode) -> bool:
    return is_last_code(reverse(t), reflect_code(t, p))


# -- cardinality oracle ---------------------------------------------------

def _fin(n: int) -> CardClass:
    return CardClass(0, n)


def _cnf_gap(a: CNF, b: CNF) -> CardClass:
    """|[a, b]| inside a countable ordinal, a <= b."""
    d = a.left_sub(b)
    return _fin(d.to_int() + 1) if d.is_finite() else ALEPH0


def _ord2_value(p) -> Tuple[CNF, CNF]:
    return p


def head_card(t: OrderTerm, p: PointCode) -> CardClass:
    """Cardinality class of the closed initial segment up to ``p``."""
    if t == ONE:
        return FIN1
    if isinstance(t, FinChain) or t == OMEGA:
        return _fin(p + 1)
    if t in (OMEGA_STAR, ZETA, ETA):
        return ALEPH0
    if t == OMEGA1:
        return _fin(p.to_int() + 1) if p.is_finite() else ALEPH0
    if t == OMEGA1_STAR:
        return ALEPH1
    if t == OMEGA2:
        d, r = p
        if not d.is_zero():
            return ALEPH1
        return _fin(r.to_int() + 1) if r.is_finite() else ALEPH0
    if t == OMEGA2_STAR:
        return ALEPH2PLUS
    if t == U_LINE:
        return ALEPH1  # below any point lies a full w1* of spine points
    if isinstance(t, Sum):
        i, sub = p
        total = head_card(t.parts[i], sub)
        for part in t.parts[:i]:
            total = total + card_of(part)
        return total
    if isinstance(t, LexProd):
        oc, ic = p
        before = head_card(t.outer, oc)
        if before.rank == 0:
            before = _fin(before.n - 1)  # full copies strictly below
        return before * card_of(t.inner) + head_card(t.inner, ic)
    raise InvalidCode(f"no points in {t}")


def tail_card(t: OrderTerm, p: PointCode) -> CardClass:
    """Cardinality class of the closed final segment from ``p``."""
    return head_card(reverse(t), reflect_code(t, p))


def interval_class(t: OrderTerm, p: PointCode, q: PointCode) -> CardClass:
    """Cardinality class of the closed interval between ``p`` and ``q``."""
    validate_code(t, p)
    validate_code(t, q)
    return _interval(t, p, q)


def _interval(t: OrderTerm, p, q) -> CardClass:
    c = _compare(t, p, q)
    if c == EQ:
        return FIN1
    if c == GT:
        p, q = q, p
    if t == ONE or isinstance(t, FinChain) or t in (OMEGA, OMEGA_STAR, ZETA):
        return _fin(abs(p - q) + 1)
    if t == ETA:
        return ALEPH0
    if t in (OMEGA1, OMEGA1_STAR):
        lo, hi = (p, q) if p < q else (q, p)
        return _cnf_gap(lo, hi)
    if t in (OMEGA2, OMEGA2_STAR):
        (d1, r1), (d2, r2) = sorted([_ord2_value(p), _ord2_value(q)])
        if d1 != d2:
            return ALEPH1
        return _cnf_gap(r1, r2)
    if t == U_LINE:
        return ALEPH0  # every proper interval of U is countably infinite
    if isinstance(t, Sum):
        (i, ps), (j, qs) = p, q
        if i == j:
            return _interval(t.parts[i], ps, qs)
        total = tail_card(t.parts[i], ps) + head_card(t.parts[j], qs)
        for part in t.parts[i + 1:j]:
            total = total + card_of(part)
        return total
    if isinstance(t, LexProd):
        (ao, ai), (bo, bi) = p, q
        if _compare(t.outer, ao, bo) == EQ:
            return _interval(t.inner, ai, bi)
        between = _interval(t.outer, ao, bo)
        if between.rank == 0:
            between = _fin(between.n - 2)  # outer points strictly between
        return (tail_card(t.inner, ai) + between * card_of(t.inner)
                + head_card(t.inner, bi))
    raise InvalidCode(f"no points in {t}")


def interval_is_small(t: OrderTerm, p, q, level) -> bool:
    return is_small(interval_class(t, p, q), level)


# -- sampling -------------------------------------------------------------

_CNF_PALETTE = [ZERO, CNF1, CNF.from_int(2), CNF.from_int(5), OMEGA_CNF,
                OMEGA_CNF + CNF1, OMEGA_CNF + CNF.from_int(3),
                OMEGA_CNF * CNF.from_int(2),
                OMEGA_CNF * CNF.from_int(2) + CNF1,
                CNF.omega_power(CNF.from_int(2)),
                CNF.omega_power(CNF.from_int(2)) + OMEGA_CNF + CNF1]


def _rand_cnf(rng: random.Random) -> CNF:
    return rng.choice(_CNF_PALETTE) + CNF.from_int(rng.randrange(4))


def _rand_frac(rng: random.Random) -> Fraction:
    return Fraction(rng.randrange(-60, 61), rng.randrange(1, 13))


def _atom_samples(t: OrderTerm, rng: random.Random,
                  count: int) -> List[PointCode]:
    extra = max(0, count - 7)
    if t == ONE:
        return [0]
    if isinstance(t, FinChain):
        pts = [0, 1, t.n - 1] + [rng.randrange(t.n)
                                 for _ in range(3 + extra)]
        return [p for p in pts if p < t.n]
    if t in (OMEGA, OMEGA_STAR):
        return [0, 1, 2] + [rng.randrange(10 * (3 + extra))
                            for _ in range(3 + extra)]
    if t == ZETA:
        bound = 10 * (3 + extra)
        return [0, 1, -1] + [rng.randrange(-bound, bound + 1)
                             for _ in range(3 + extra)]
    if t == ETA:
        return [Fraction(0), Fraction(1)] + [_rand_frac(rng)
                                             for _ in range(4 + extra)]
    if t in (OMEGA1, OMEGA1_STAR):
        return [ZERO, CNF1, OMEGA_CNF, OMEGA_CNF + CNF1] + \
            [_rand_cnf(rng) + CNF.from_int(rng.randrange(40))
             for _ in range(2 + extra)]
    if t in (OMEGA2, OMEGA2_STAR):
        return [(ZERO, ZERO), (ZERO, OMEGA_CNF), (CNF1, ZERO),
                (CNF.from_int(3), CNF.from_int(17))] + \
            [(_rand_cnf(rng), _rand_cnf(rng)) for _ in range(1 + extra)]
    if t == U_LINE:
        base = [UPoint(Side.NEG, CNF1, SPINE),
                UPoint(Side.NEG, ZERO, _rand_frac(rng)),
                UPoint(Side.MID, ZERO, Fraction(0)),
                UPoint(Side.MID, ZERO, _rand_frac(rng)),
                UPoint(Side.POS, ZERO, SPINE),
                UPoint(Side.POS, OMEGA_CNF, SPINE),
                UPoint(Side.POS, _rand_cnf(rng), _rand_frac(rng))]
        for _ in range(extra):
            side = rng.choice((Side.NEG, Side.MID, Side.POS))
            index = ZERO if side is Side.MID else _rand_cnf(rng)
            slot = SPINE if side is not Side.MID and rng.random() < 0.4 \
                else _rand_frac(rng)
            base.append(UPoint(side, index, slot))
        return base
    return []


def sample_points(t: OrderTerm, budget: int, seed: int) -> List[PointCode]:
    """A deterministic sample of at most ``budget`` valid codes, including
    first/last points, a successor pair and a limit-position point when the
    shape provides them."""
    if budget < 1:
        raise ValueError("budget must be at least 1")
    rng = random.Random(seed)
    pts = _gen_points(t, rng, min(budget, 800))
    seen = set()
    out: List[PointCode] = []
    for p in pts:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out[:budget]


def _gen_points(t: OrderTerm, rng: random.Random,
                count: int) -> List[PointCode]:
    if t == EMPTY:
        return []
    if isinstance(t, Sum):
        share = max(4, count // len(t.parts) + 1)
        per_part = [[(i, sub) for sub in _gen_points(part, rng, share)]
                    for i, part in enumerate(t.parts)]
        # interleave round-robin so early parts cannot starve the budget
        pts = []
        k = 0
        while any(per_part):
            for lst in per_part:
                if k < len(lst):
                    pts.append(lst[k])
            if all(k >= len(lst) for lst in per_part):
                break
            k += 1
        return pts
    if isinstance(t, LexProd):
        side = max(4, int(count ** 0.5) + 1)
        outer = _gen_points(t.outer, rng, side)
        inner = _gen_points(t.inner, rng, side)
        pts = [(o, i) for o in outer[:side] for i in inner[:side]]
        pts.extend((o, i) for o in outer[side:] for i in inner[:2])
        return pts
    return _atom_samples(t, rng, count)


# -- Cantor embedding -----------------------------------------------------

def cantor_embed(points: List[PointCode],
                 cmp: Callable[[PointCode, PointCode], int]) -> List[Fraction]:
    """Assign rationals to pairwise distinct points, strictly preserving the
    order given by ``cmp``, by sequential midpoint insertion."""
    placed: List[Tuple[PointCode, Fraction]] = []  # kept sorted
    out: List[Fraction] = []
    for p in points:
        lo, hi = 0, len(placed)
        while lo < hi:
            mid = (lo + hi) // 2
            if cmp(placed[mid][0], p) == LT:
                lo = mid + 1
            else:
                hi = mid
        if not placed:
            value = Fraction(0)
        elif lo == 0:
            value = placed[0][1] - 1
        elif lo == len(placed):
            value = placed[-1][1] + 1
        else:
            value = (placed[lo - 1][1] + placed[lo][1]) / 2
        placed.insert(lo, (p, value))
        out.append(value)
    return out


# -- serialization --------------------------------------------------------

def point_to_json(p: PointCode):
    if isinstance(p, bool):
        raise InvalidCode(f"bad code {p!r}")
    if isinstance(p, int):
        return p
    if isinstance(p, Fraction):
        return {"kind": "rational", "value": f"{p.numerator}/{p.denominator}"}
    if isinstance(p, CNF):
        return {"kind": "cnf", "value": str(p)}
    if isinstance(p, UPoint):
        return {"kind": "upoint", "side": p.side.name, "index": str(p.index),
                "slot": "SPINE" if p.slot is SPINE else point_to_json(p.slot)}
    if isinstance(p, tuple):
        return {"kind": "pair", "items": [point_to_json(x) for x in p]}
    raise InvalidCode(f"cannot serialize {p!r}")
