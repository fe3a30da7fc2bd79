"""Condensation of order-type terms.

``cc(t, level)`` computes the quotient of ``t`` by the relation "x ~ y iff
the interval between x and y is small", where small means finite or countable
depending on the level, together with two flags:

  * ``merge_left``: the quotient has a first class and that class is a small
    head of the original order;
  * ``merge_right``: dually for the last class.

The flags are what sum and product rules need to decide whether boundary
classes of adjacent pieces merge.  The structural rules and the atom base
cases live in ``data/condensation_rules.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Dict, Tuple

from .classify import Level, card_of, is_small, small_head, small_tail
from .cnf import OMEGA as OMEGA_CNF
from .cnf import ONE as CNF1
from .errors import UnsupportedFragment
from .normalize import (_norm_lex, _norm_sum, detach_first, detach_last,
                        has_first, has_last, normalize)
from .ordinal import OrdinalValue, render_value, reversed_term_value, term_value
from .terms import (EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, OrderTerm, Sum, reverse)


@dataclass(frozen=True)
class CondResult:
    quotient: OrderTerm
    merge_left: bool
    merge_right: bool

    def to_json(self) -> dict:
        return {
            "quotient": str(self.quotient),
            "mergeLeft": self.merge_left,
            "mergeRight": self.merge_right,
        }


_NAME_TO_TERM = {
    "0": EMPTY, "1": ONE, "w": OMEGA, "w*": OMEGA_STAR, "z": ZETA,
    "q": ETA, "w1": OMEGA1, "w1*": OMEGA1_STAR, "w2": OMEGA2,
    "rev(w2)": OMEGA2_STAR, "U": U_LINE,
}


def _load_atom_table() -> Dict[Tuple[Level, OrderTerm], CondResult]:
    raw = json.loads(resources.files("ordalg.data")
                     .joinpath("condensation_rules.json").read_text())
    table: Dict[Tuple[Level, OrderTerm], CondResult] = {}
    for row in raw["atoms"]:
        key = (Level(row["level"]), _NAME_TO_TERM[row["atom"]])
        table[key] = CondResult(_NAME_TO_TERM[row["quotient"]],
                                row["mergeLeft"], row["mergeRight"])
    return table


_ATOM_TABLE = _load_atom_table()


def cc(t: OrderTerm, level: Level) -> CondResult:
    """Condense ``t`` at the given level."""
    return _cc(normalize(t), level)


@lru_cache(maxsize=None)
def _cc(t: OrderTerm, level: Level) -> CondResult:
    if t == EMPTY:
        return CondResult(EMPTY, False, False)
    if is_small(card_of(t), level):
        return CondResult(ONE, True, True)
    v = term_value(t)
    if v is not None:
        return cc_ordinal(v, level)
    rv = reversed_term_value(t)
    if rv is not None:
        r = cc_ordinal(rv, level)
        return CondResult(normalize(reverse(r.quotient)),
                          r.merge_right, r.merge_left)
    if (level, t) in _ATOM_TABLE:
        return _ATOM_TABLE[(level, t)]
    if isinstance(t, Sum):
        return _cc_sum(t, level)
    if isinstance(t, LexProd):
        return _cc_lex(t.outer, t.inner, level)
    raise UnsupportedFragment(f"cannot condense {t}")


def cc_ordinal(v: OrdinalValue, level: Level) -> CondResult:
    """Condense the ordinal ``w1 * delta + rho`` directly from its value."""
    if v.is_zero():
        return CondResult(EMPTY, False, False)
    if level is Level.COUNTABLE:
        if v.is_countable():
            return CondResult(ONE, True, True)
        # each w1-block is one class; a countable remainder is one more
        tail = not v.rho.is_zero()
        q = OrdinalValue.countable(v.delta + CNF1 if tail else v.delta)
        return CondResult(render_value(q), True, tail)
    # finite level: each w-block of the countable part is one class
    if v.is_countable() and v.rho.is_finite():
        return CondResult(ONE, True, True)
    a, n = v.rho.divmod_by(OMEGA_CNF)  # rho == w*a + n with n finite
    tail = not n.is_zero()
    q = OrdinalValue(v.delta, a + CNF1 if tail else a)
    return CondResult(render_value(q), True, tail)


def _cc_sum(t: Sum, level: Level) -> CondResult:
    results = [_cc(p, level) for p in t.parts]
    acc = results[0].quotient
    acc_mr = results[0].merge_right
    for res in results[1:]:
        if acc_mr and res.merge_left:
            acc = _norm_sum([detach_last(acc), ONE,
                             detach_first(res.quotient)])
        else:
            acc = _norm_sum([acc, res.quotient])
        acc_mr = res.merge_right
    return CondResult(acc, results[0].merge_left, results[-1].merge_right)


def _cc_lex(a: OrderTerm, b: OrderTerm, level: Level) -> CondResult:
    if is_small(card_of(b), level):
        # small blocks are transparent to the condensation
        return _cc(a, level)
    rb = _cc(b, level)
    if rb.quotient == ONE:
        # b is a right identity: every copy of b is exactly one class
        return CondResult(a,
                          has_first(a) and small_head(b, level),
                          has_last(a) and small_tail(b, level))
    if rb.merge_left and rb.merge_right:
        q = glue(a, rb.quotient)
    else:
        q = _norm_lex(a, rb.quotient)
    return CondResult(q,
                      rb.merge_left and has_first(a),
                      rb.merge_right and has_last(a))


def glue(a: OrderTerm, q: OrderTerm) -> OrderTerm:
    """``a`` copies of ``q``, with the last class of each copy identified
    with the first class of the next copy.  ``q`` must have both endpoints."""
    if a == EMPTY:
        return EMPTY
    if a == ONE:
        return q
    if isinstance(a, FinChain):
        return _norm_sum([_norm_lex(a, detach_last(q)), ONE])
    if a == OMEGA:
        return _norm_lex(OMEGA, detach_last(q))
    if a == OMEGA_STAR:
        return _norm_sum([_norm_lex(OMEGA_STAR, detach_last(q)), ONE])
    if a == ZETA:
        return _norm_lex(ZETA, detach_last(q))
    if a in (ETA, U_LINE):
        # no two copies are adjacent, so no seam ever merges
        return _norm_lex(a, q)
    if a in (OMEGA1, OMEGA2):
        # limit-index copies keep their first class, which w1*detach_last(q)
        # (resp. w2*...) already does; successor copies absorb the seam
        return _norm_lex(a, detach_last(q))
    if a in (OMEGA1_STAR, OMEGA2_STAR):
        # limit-index copies here lack immediate successors, so their top
        # classes survive; the mirror of the forward rule captures that
        fwd = OMEGA1 if a == OMEGA1_STAR else OMEGA2
        return normalize(reverse(glue(fwd, normalize(reverse(q)))))
    if isinstance(a, Sum):
        acc = glue(a.parts[0], q)
        for prev, part in zip(a.parts, a.parts[1:]):
            g = glue(part, q)
            if has_last(prev) and has_first(part):
                acc = _norm_sum([detach_last(acc), ONE, detach_first(g)])
            else:
                acc = _norm_sum([acc, g])
        return acc
    if isinstance(a, LexProd):
        if has_first(a.inner) and has_last(a.inner):
            return glue(a.outer, glue(a.inner, q))
        return _norm_lex(a.outer, glue(a.inner, q))
    raise UnsupportedFragment(f"glue along {a}")
