"""The symbolic term language for order types.

A term in normal form satisfies:
  * ``Sum`` parts are flattened, nonempty, and there are at least two;
  * ``LexProd`` factors are neither ``Empty`` nor ``Single``, and nesting is
    pushed to the right (``LexProd(a, LexProd(b, c))``);
  * explicit ``Rev`` nodes never survive normalization -- reversal is pushed
    down to atoms, each of which has a reversed counterpart;
  * subterms denoting ordinals are rewritten to a canonical shape
    (see :mod:`ordalg.ordinal`).

``LexProd(outer, inner)`` denotes ``outer`` copies of ``inner``: each element
of the outer factor is replaced by a copy of the inner factor.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class OrderTerm:
    def __str__(self) -> str:
        return pretty(self)


@dataclass(frozen=True)
class Empty(OrderTerm):
    pass


@dataclass(frozen=True)
class Single(OrderTerm):
    pass


@dataclass(frozen=True)
class FinChain(OrderTerm):
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("FinChain needs n >= 2")


@dataclass(frozen=True)
class NatOrd(OrderTerm):
    """omega"""


@dataclass(frozen=True)
class NatOrdRev(OrderTerm):
    """omega-star"""


@dataclass(frozen=True)
class IntOrd(OrderTerm):
    """zeta, the integers"""


@dataclass(frozen=True)
class RatOrd(OrderTerm):
    """eta, the rationals"""


@dataclass(frozen=True)
class Omega1(OrderTerm):
    pass


@dataclass(frozen=True)
class Omega1Rev(OrderTerm):
    pass


@dataclass(frozen=True)
class Omega2(OrderTerm):
    pass


@dataclass(frozen=True)
class Omega2Rev(OrderTerm):
    pass


@dataclass(frozen=True)
class ULine(OrderTerm):
    """The omega_1-lengthened rational line."""


@dataclass(frozen=True)
class Sum(OrderTerm):
    parts: Tuple[OrderTerm, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("Sum needs at least two parts")


@dataclass(frozen=True)
class LexProd(OrderTerm):
    outer: OrderTerm
    inner: OrderTerm


@dataclass(frozen=True)
class Rev(OrderTerm):
    arg: OrderTerm


EMPTY = Empty()
ONE = Single()
OMEGA = NatOrd()
OMEGA_STAR = NatOrdRev()
ZETA = IntOrd()
ETA = RatOrd()
OMEGA1 = Omega1()
OMEGA1_STAR = Omega1Rev()
OMEGA2 = Omega2()
OMEGA2_STAR = Omega2Rev()
U_LINE = ULine()

ATOMS = (EMPTY, ONE, OMEGA, OMEGA_STAR, ZETA, ETA,
         OMEGA1, OMEGA1_STAR, OMEGA2, OMEGA2_STAR, U_LINE)

_REV_ATOM = {
    OMEGA: OMEGA_STAR, OMEGA_STAR: OMEGA,
    OMEGA1: OMEGA1_STAR, OMEGA1_STAR: OMEGA1,
    OMEGA2: OMEGA2_STAR, OMEGA2_STAR: OMEGA2,
    ZETA: ZETA, ETA: ETA, U_LINE: U_LINE,
    EMPTY: EMPTY, ONE: ONE,
}


def fin(n: int) -> OrderTerm:
    """The finite chain with ``n`` elements."""
    if n < 0:
        raise ValueError("negative chain length")
    if n == 0:
        return EMPTY
    if n == 1:
        return ONE
    return FinChain(n)


def reverse(t: OrderTerm) -> OrderTerm:
    """Reverse the order, pushing the reversal down to atoms."""
    if isinstance(t, FinChain):
        return t
    if t in _REV_ATOM:
        return _REV_ATOM[t]
    if isinstance(t, Sum):
        return Sum(tuple(reverse(p) for p in reversed(t.parts)))
    if isinstance(t, LexProd):
        return LexProd(reverse(t.outer), reverse(t.inner))
    if isinstance(t, Rev):
        return t.arg
    raise TypeError(f"unknown term {t!r}")


_ATOM_NAMES = {
    EMPTY: "0", ONE: "1", OMEGA: "w", OMEGA_STAR: "w*", ZETA: "z",
    ETA: "q", OMEGA1: "w1", OMEGA1_STAR: "w1*", OMEGA2: "w2", U_LINE: "U",
}


def pretty(t: OrderTerm) -> str:
    """Render a term in the surface grammar; inverse of the parser on
    normal forms."""
    return _pretty(t, 0)


def _pretty(t: OrderTerm, prec: int) -> str:
    if t in _ATOM_NAMES:
        return _ATOM_NAMES[t]
    if t == OMEGA2_STAR:
        return "rev(w2)"
    if isinstance(t, FinChain):
        return str(t.n)
    if isinstance(t, Sum):
        body = " + ".join(_pretty(p, 1) for p in t.parts)
        return f"({body})" if prec >= 1 else body
    if isinstance(t, LexProd):
        body = f"{_pretty(t.outer, 2)}*{_pretty(t.inner, 2)}"
        return f"({body})" if prec >= 2 else body
    if isinstance(t, Rev):
        return f"rev({_pretty(t.arg, 0)})"
    raise TypeError(f"unknown term {t!r}")
