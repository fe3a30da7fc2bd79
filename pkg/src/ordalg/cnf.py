"""Countable ordinals below epsilon_0 in Cantor normal form.

An ordinal is a tuple of (exponent, coefficient) monomials with strictly
decreasing exponents and positive integer coefficients; the empty tuple is 0.
All arithmetic follows the standard (non-lexicographic) ordinal conventions:
``a + b``, ``a * b`` mean the usual ordinal sum and product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterator, Tuple


@total_ordering
@dataclass(frozen=True)
class CNF:
    monomials: Tuple[Tuple["CNF", int], ...] = ()

    def __post_init__(self):
        prev = None
        for exp, coeff in self.monomials:
            if not isinstance(exp, CNF) or coeff <= 0:
                raise ValueError(f"bad monomial ({exp!r}, {coeff!r})")
            if prev is not None and not exp < prev:
                raise ValueError("exponents must be strictly decreasing")
            prev = exp

    # -- construction -----------------------------------------------------

    @staticmethod
    def from_int(n: int) -> "CNF":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        if n == 0:
            return ZERO
        return CNF(((ZERO, n),))

    @staticmethod
    def omega_power(exp: "CNF", coeff: int = 1) -> "CNF":
        return CNF(((exp, coeff),))

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.monomials

    def is_finite(self) -> bool:
        return not self.monomials or (len(self.monomials) == 1
                                      and self.monomials[0][0].is_zero())

    def to_int(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is infinite")
        return self.monomials[0][1] if self.monomials else 0

    def finite_part(self) -> int:
        """The coefficient of omega^0, i.e. the trailing natural number."""
        if self.monomials and self.monomials[-1][0].is_zero():
            return self.monomials[-1][1]
        return 0

    def limit_part(self) -> "CNF":
        """Self with its finite part removed (the largest limit ordinal below
        or equal to self)."""
        if self.finite_part():
            return CNF(self.monomials[:-1])
        return self

    def is_successor(self) -> bool:
        return self.finite_part() > 0

    def is_limit(self) -> bool:
        return bool(self.monomials) and self.finite_part() == 0

    # -- order ------------------------------------------------------------

    def __lt__(self, other: "CNF") -> bool:
        for (e1, c1), (e2, c2) in zip(self.monomials, other.monomials):
            if e1 != e2:
                return e1 < e2
            if c1 != c2:
                return c1 < c2
        return len(self.monomials) < len(other.monomials)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "CNF") -> "CNF":
        if other.is_zero():
            return self
        cut = other.monomials[0][0]
        kept = [(e, c) for e, c in self.monomials if e > cut]
        rest = list(other.monomials)
        if len(kept) < len(self.monomials) and self.monomials[len(kept)][0] == cut:
            rest[0] = (cut, self.monomials[len(kept)][1] + rest[0][1])
        return CNF(tuple(kept) + tuple(rest))

    def left_sub(self, other: "CNF") -> "CNF":
        """The unique d with self + d == other; requires self <= other."""
        if other < self:
            raise ValueError("left_sub needs self <= other")
        for i, (e, c) in enumerate(self.monomials):
            if i >= len(other.monomials):
                break
            oe, oc = other.monomials[i]
            if e != oe or c != oc:
                if e == oe and c < oc:
                    return CNF(((oe, oc - c),) + other.monomials[i + 1:])
                return CNF(other.monomials[i:])
        return CNF(other.monomials[len(self.monomials):])

    def __mul__(self, other: "CNF") -> "CNF":
        if self.is_zero() or other.is_zero():
            return ZERO
        e1 = self.monomials[0][0]
        result = ZERO
        for exp, coeff in other.monomials:
            if exp.is_zero():
                # self * n = leading-monomial scaled, tail kept once
                head = CNF(((e1, self.monomials[0][1] * coeff),)
                           + self.monomials[1:])
                result = result + head
            else:
                result = result + CNF.omega_power(e1 + exp, coeff)
        return result

    def divmod_by(self, b: "CNF") -> Tuple["CNF", "CNF"]:
        """Return (q, r) with b * q + r == self and r < b."""
        if b.is_zero():
            raise ZeroDivisionError("ordinal division by zero")
        q, r = ZERO, self
        f1, d1 = b.monomials[0]
        while not r < b:
            e1, c1 = r.monomials[0]
            if e1 > f1:
                step = CNF.omega_power(f1.left_sub(e1), c1)
            else:
                k = c1 // d1
                if d1 * k == c1 and CNF(b.monomials[1:]) > CNF(r.monomials[1:]):
                    k -= 1
                step = CNF.from_int(k)
            q = q + step
            r = (b * step).left_sub(r)
        return q, r

    # -- display ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        bits = []
        for exp, coeff in self.monomials:
            if exp.is_zero():
                bits.append(str(coeff))
                continue
            if exp == ONE:
                base = "w"
            else:
                base = f"w^({exp})" if exp.monomials and not exp.is_finite() \
                    else f"w^{exp}"
            bits.append(base if coeff == 1 else f"{base}.{coeff}")
        return "+".join(bits)

    def __repr__(self) -> str:
        return f"CNF<{self}>"


ZERO = CNF()
ONE = CNF.from_int(1)
OMEGA = CNF.omega_power(ZERO + ONE)


def iter_below(bound: CNF, limit: int) -> Iterator[CNF]:
    """Enumerate up to ``limit`` ordinals below ``bound`` (finite ones first)."""
    n = 0
    current = ZERO
    while n < limit and current < bound:
        yield current
        current = current + ONE
        n += 1
