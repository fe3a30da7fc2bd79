"""Structural attributes of terms: cardinality, cofinality, coinitiality,
small-head/small-tail flags, and the right-identity decision."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .normalize import has_first, has_last
from .terms import (EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, OrderTerm, Sum, reverse)


class Level(enum.Enum):
    """Which sets count as small: finite sets (condensation by finite
    interval) or countable sets (condensation by countable interval)."""

    FINITE = "finite"
    COUNTABLE = "countable"


@dataclass(frozen=True, order=True)
class CardClass:
    """Cardinality class: an exact finite size, aleph_0, aleph_1, or
    'aleph_2 or larger'.  Ordered by size; arithmetic is max-based with
    finite classes absorbed by any infinite one."""

    rank: int  # 0 = finite, 1 = aleph_0, 2 = aleph_1, 3 = aleph_2+
    n: Optional[int] = None  # exact size when rank == 0

    def __post_init__(self):
        if (self.rank == 0) != (self.n is not None):
            raise ValueError("exact size exactly for finite classes")

    def __add__(self, other: "CardClass") -> "CardClass":
        if self.rank == 0 and other.rank == 0:
            return CardClass(0, self.n + other.n)
        return max(self, other, key=lambda c: c.rank)

    def __mul__(self, other: "CardClass") -> "CardClass":
        if self.n == 0 or other.n == 0:
            return FIN0
        if self.rank == 0 and other.rank == 0:
            return CardClass(0, self.n * other.n)
        return max(self, other, key=lambda c: c.rank)

    def __str__(self) -> str:
        return (str(self.n) if self.rank == 0
                else ["", "aleph0", "aleph1", "aleph2+"][self.rank])


FIN0 = CardClass(0, 0)
FIN1 = CardClass(0, 1)
ALEPH0 = CardClass(1)
ALEPH1 = CardClass(2)
ALEPH2PLUS = CardClass(3)


def is_small(card: CardClass, level: Level) -> bool:
    return card.rank == 0 if level is Level.FINITE else card.rank <= 1


class Cof(enum.IntEnum):
    """Symbolic cofinality / coinitiality values."""

    ZERO = 0
    ONE = 1
    OMEGA = 2
    OMEGA1 = 3
    OMEGA2 = 4

    def __str__(self) -> str:
        return {0: "0", 1: "1", 2: "w", 3: "w1", 4: "w2"}[self.value]


# atom attribute tables live in the rule-ledger data file
_ATOM_BY_NAME = {
    "0": EMPTY, "1": ONE, "w": OMEGA, "w*": OMEGA_STAR, "z": ZETA,
    "q": ETA, "w1": OMEGA1, "w1*": OMEGA1_STAR, "w2": OMEGA2,
    "rev(w2)": OMEGA2_STAR, "U": U_LINE,
}
_CARD_BY_NAME = {"0": FIN0, "1": FIN1, "aleph0": ALEPH0,
                 "aleph1": ALEPH1, "aleph2+": ALEPH2PLUS}
_COF_BY_NAME = {"0": Cof.ZERO, "1": Cof.ONE, "w": Cof.OMEGA,
                "w1": Cof.OMEGA1, "w2": Cof.OMEGA2}


def _load_attribute_tables():
    import json
    from importlib import resources
    raw = json.loads(resources.files("ordalg.data")
                     .joinpath("condensation_rules.json").read_text())
    cards, cofs = {}, {}
    for row in raw["attributes"]:
        atom = _ATOM_BY_NAME[row["atom"]]
        cards[atom] = _CARD_BY_NAME[row["card"]]
        cofs[atom] = _COF_BY_NAME[row["cofinality"]]
    return cards, cofs


_ATOM_CARD, _ATOM_COFIN = _load_attribute_tables()


def card_of(t: OrderTerm) -> CardClass:
    if t in _ATOM_CARD:
        return _ATOM_CARD[t]
    if isinstance(t, FinChain):
        return CardClass(0, t.n)
    if isinstance(t, Sum):
        total = FIN0
        for p in t.parts:
            total = total + card_of(p)
        return total
    if isinstance(t, LexProd):
        return card_of(t.outer) * card_of(t.inner)
    raise TypeError(f"unknown term {t!r}")


def cofinality(t: OrderTerm) -> Cof:
    if t in _ATOM_COFIN:
        return _ATOM_COFIN[t]
    if isinstance(t, FinChain):
        return Cof.ONE
    if isinstance(t, Sum):
        return cofinality(t.parts[-1])
    if isinstance(t, LexProd):
        return cofinality(t.inner) if has_last(t.outer) else cofinality(t.outer)
    raise TypeError(f"unknown term {t!r}")


def coinitiality(t: OrderTerm) -> Cof:
    return cofinality(reverse(t))


def small_tail(t: OrderTerm, level: Level) -> bool:
    """Does ``t`` have a nonempty small final segment?  The whole order
    counts as one of its own tails."""
    if t == EMPTY:
        return False
    if is_small(card_of(t), level):
        return True
    if has_last(t):
        return True
    if isinstance(t, Sum):
        return small_tail(t.parts[-1], level)
    if isinstance(t, LexProd):
        if has_last(t.outer):
            return small_tail(t.inner, level)
        return small_tail(t.outer, level) and is_small(card_of(t.inner), level)
    return False  # infinite atoms without a last element


def small_head(t: OrderTerm, level: Level) -> bool:
    """Mirror of :func:`small_tail`."""
    return small_tail(reverse(t), level)


@dataclass(frozen=True)
class Profile:
    card: CardClass
    cofin: Cof
    coin: Cof
    has_first: bool
    has_last: bool
    small_head: bool
    small_tail: bool
    condenses_to_one: bool
    right_identity: bool

    def to_json(self) -> dict:
        return {
            "card": str(self.card),
            "cofinality": str(self.cofin),
            "coinitiality": str(self.coin),
            "hasFirst": self.has_first,
            "hasLast": self.has_last,
            "smallHead": self.small_head,
            "smallTail": self.small_tail,
            "condensesToOne": self.condenses_to_one,
            "rightIdentity": self.right_identity,
        }


def condenses_to_one(t: OrderTerm, level: Level) -> bool:
    from .condense import cc
    return cc(t, level).quotient == ONE


def right_identity(t: OrderTerm, level: Level) -> bool:
    """Is ``M * t`` condensation-equal to ``M`` for every ``M``?  Holds
    exactly when ``t`` condenses to a point but is itself too large to be
    small at the level."""
    return (not is_small(card_of(t), level)
            and condenses_to_one(t, level))


def profile(t: OrderTerm, level: Level) -> Profile:
    """Compute all structural attributes of a normalized term."""
    cto = condenses_to_one(t, level)
    return Profile(
        card=card_of(t),
        cofin=cofinality(t),
        coin=coinitiality(t),
        has_first=has_first(t),
        has_last=has_last(t),
        small_head=small_head(t, level),
        small_tail=small_tail(t, level),
        condenses_to_one=cto,
        right_identity=cto and not is_small(card_of(t), level),
    )


@dataclass(frozen=True)
class ConsistencyReport:
    """The three independently computed equivalent conditions for being a
    right identity at the countable level, and whether they agree."""

    term: OrderTerm
    cond_cofinal: bool     # condenses to 1 and cf or cf* equals omega_1
    cond_tails: bool       # condenses to 1 and lacks a countable tail or head
    cond_uncountable: bool  # condenses to 1 and is uncountable

    @property
    def consistent(self) -> bool:
        return self.cond_cofinal == self.cond_tails == self.cond_uncountable

    def to_json(self) -> dict:
        return {
            "term": str(self.term),
            "condensesToOneWithOmega1End": self.cond_cofinal,
            "condensesToOneWithoutSmallEnd": self.cond_tails,
            "condensesToOneUncountable": self.cond_uncountable,
            "consistent": self.consistent,
        }


def check_tfae(t: OrderTerm) -> ConsistencyReport:
    """Evaluate three equivalent right-identity criteria independently."""
    cto = condenses_to_one(t, Level.COUNTABLE)
    cond2 = cto and (cofinality(t) == Cof.OMEGA1
                     or coinitiality(t) == Cof.OMEGA1)
    cond3 = cto and (not small_tail(t, Level.COUNTABLE)
                     or not small_head(t, Level.COUNTABLE))
    cond5 = cto and card_of(t) > ALEPH0
    return ConsistencyReport(t, cond2, cond3, cond5)
