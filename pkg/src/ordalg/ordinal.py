"""Ordinal values of ordinal-shaped terms.

The supported ordinal fragment consists of the ordinals ``omega_1 * delta +
rho`` with ``delta`` and ``rho`` countable (CNF below epsilon_0).  That covers
every well-ordered term built from finite chains, ``w`` and ``w1`` under sums
and lexicographic products.  ``w2`` stays a symbolic atom outside this
fragment.

``term_value`` recognizes ordinal-shaped terms; ``render_value`` produces the
canonical term for a value, which is what normalization rewrites ordinal
subterms to.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import List, Optional, Tuple

from .cnf import CNF, ZERO
from .cnf import ONE as CNF1
from .errors import UnsupportedFragment
from .terms import (EMPTY, OMEGA, OMEGA1, ONE, FinChain, LexProd, NatOrd,
                    Omega1, OrderTerm, Rev, Single, Sum, fin, reverse)


@total_ordering
@dataclass(frozen=True)
class OrdinalValue:
    """The ordinal ``omega_1 * delta + rho`` (standard product order)."""

    delta: CNF = ZERO
    rho: CNF = ZERO

    @staticmethod
    def countable(rho: CNF) -> "OrdinalValue":
        return OrdinalValue(ZERO, rho)

    @staticmethod
    def from_int(n: int) -> "OrdinalValue":
        return OrdinalValue(ZERO, CNF.from_int(n))

    def is_zero(self) -> bool:
        return self.delta.is_zero() and self.rho.is_zero()

    def is_countable(self) -> bool:
        return self.delta.is_zero()

    def __lt__(self, other: "OrdinalValue") -> bool:
        return (self.delta, self.rho) < (other.delta, other.rho)

    def __add__(self, other: "OrdinalValue") -> "OrdinalValue":
        if not other.delta.is_zero():
            return OrdinalValue(self.delta + other.delta, other.rho)
        return OrdinalValue(self.delta, self.rho + other.rho)

    def left_sub(self, other: "OrdinalValue") -> "OrdinalValue":
        """The unique d with self + d == other; requires self <= other."""
        if other < self:
            raise ValueError("left_sub needs self <= other")
        if self.delta < other.delta:
            return OrdinalValue(self.delta.left_sub(other.delta), other.rho)
        return OrdinalValue(ZERO, self.rho.left_sub(other.rho))

    def __mul__(self, other: "OrdinalValue") -> "OrdinalValue":
        """Standard ordinal product; raises UnsupportedFragment when the
        result leaves the ``omega_1 * delta + rho`` fragment."""
        if self.is_zero() or other.is_zero():
            return OrdinalValue()
        result = OrdinalValue()
        if not other.delta.is_zero():
            if not self.delta.is_zero():
                raise UnsupportedFragment(
                    "product reaches omega_1 * omega_1")
            result = OrdinalValue(other.delta, ZERO)
        rho = other.rho
        if not rho.is_zero():
            if self.delta.is_zero():
                result = result + OrdinalValue.countable(self.rho * rho)
            else:
                tail = self.rho if rho.is_successor() else ZERO
                result = result + OrdinalValue(self.delta * rho, tail)
        return result

    def divmod_by(self, b: "OrdinalValue") -> Tuple["OrdinalValue", "OrdinalValue"]:
        """(q, r) with b * q + r == self, r < b; supports countable b and
        b == omega_1 (the divisors occurring in canonical terms)."""
        if b.is_zero():
            raise ZeroDivisionError
        if b.is_countable():
            q, r = self.rho.divmod_by(b.rho)
            return OrdinalValue(self.delta, q), OrdinalValue.countable(r)
        if b == OMEGA1_VALUE:
            return OrdinalValue.countable(self.delta), OrdinalValue.countable(self.rho)
        raise UnsupportedFragment(f"division by {b}")

    def __str__(self) -> str:
        if self.delta.is_zero():
            return str(self.rho)
        head = "w1" if self.delta == CNF1 else f"w1.({self.delta})"
        return head if self.rho.is_zero() else f"{head}+{self.rho}"


OMEGA1_VALUE = OrdinalValue(CNF1, ZERO)
OMEGA_VALUE = OrdinalValue.countable(CNF.omega_power(CNF1))


def term_value(t: OrderTerm) -> Optional[OrdinalValue]:
    """The ordinal denoted by ``t``, or None if ``t`` is not ordinal-shaped
    (or falls outside the supported ordinal fragment)."""
    if isinstance(t, Single):
        return OrdinalValue.from_int(1)
    if t == EMPTY:
        return OrdinalValue()
    if isinstance(t, FinChain):
        return OrdinalValue.from_int(t.n)
    if isinstance(t, NatOrd):
        return OMEGA_VALUE
    if isinstance(t, Omega1):
        return OMEGA1_VALUE
    if isinstance(t, Sum):
        total = OrdinalValue()
        for p in t.parts:
            v = term_value(p)
            if v is None:
                return None
            total = total + v
        return total
    if isinstance(t, LexProd):
        vo, vi = term_value(t.outer), term_value(t.inner)
        if vo is None or vi is None:
            return None
        try:
            return vi * vo  # outer copies of inner = standard inner * outer
        except UnsupportedFragment:
            return None
    if isinstance(t, Rev):
        return None
    return None


def reversed_term_value(t: OrderTerm) -> Optional[OrdinalValue]:
    """The ordinal alpha such that ``t`` is the reverse of alpha, if any."""
    return term_value(reverse(t))


def omega_power_term(exp: CNF) -> OrderTerm:
    """Canonical term for ``omega ** exp``; exponents must be finite, which is
    all the term fragment can express."""
    if not exp.is_finite():
        raise UnsupportedFragment(f"omega^({exp}) has no term form")
    k = exp.to_int()
    if k == 0:
        return ONE
    if k == 1:
        return OMEGA
    return LexProd(OMEGA, omega_power_term(CNF.from_int(k - 1)))


def render_parts(v: OrdinalValue) -> List[OrderTerm]:
    """Canonical summand list for ``v`` (may be empty, or a single part)."""
    parts: List[OrderTerm] = []
    for exp, coeff in v.delta.monomials:
        unit = OMEGA1 if exp.is_zero() else LexProd(omega_power_term(exp), OMEGA1)
        parts.extend([unit] * coeff)
    for exp, coeff in v.rho.monomials:
        if exp.is_zero():
            parts.append(fin(coeff))
        else:
            parts.extend([omega_power_term(exp)] * coeff)
    return parts


def render_value(v: OrdinalValue) -> OrderTerm:
    parts = render_parts(v)
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))
