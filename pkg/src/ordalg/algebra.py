"""The quotient multiplication and its algebraic laws.

``mul_omega(M, L)`` condenses the lexicographic product of M and L (each
element of M replaced by a copy of L) at the countable level; ``mul_f`` is
the finite-level analog.  On terms condensing to a point this operation
forms a semigroup; restricted to right identities it is a left-regular band.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .classify import Level, condenses_to_one, right_identity
from .condense import cc
from .equality import Eq, eq_order_type
from .errors import InvalidSample
from .normalize import normalize
from .terms import LexProd, OrderTerm, pretty


def mul_level(m: OrderTerm, l: OrderTerm, level: Level) -> OrderTerm:
    return cc(LexProd(normalize(m), normalize(l)), level).quotient


def mul_omega(m: OrderTerm, l: OrderTerm) -> OrderTerm:
    return mul_level(m, l, Level.COUNTABLE)


def mul_f(m: OrderTerm, l: OrderTerm) -> OrderTerm:
    return mul_level(m, l, Level.FINITE)


@dataclass
class LawReport:
    law: str
    description: str
    passed: bool
    counterexamples: List[Tuple] = field(default_factory=list)
    unverified: List[Tuple] = field(default_factory=list)
    cases_hit: Dict[str, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "sample": self.description,
            "passed": self.passed,
            "counterexamples": [
                {"inputs": [pretty(t) for t in inputs],
                 "lhs": pretty(lhs), "rhs": pretty(rhs)}
                for inputs, lhs, rhs in self.counterexamples],
            "unverified": [
                {"inputs": [pretty(t) for t in inputs],
                 "lhs": pretty(lhs), "rhs": pretty(rhs)}
                for inputs, lhs, rhs in self.unverified],
            "casesHit": self.cases_hit,
        }


def _law_check(report: LawReport, inputs, lhs: OrderTerm, rhs: OrderTerm):
    verdict = eq_order_type(lhs, rhs)
    if verdict is Eq.NOT_EQUAL:
        report.counterexamples.append((inputs, lhs, rhs))
    elif verdict is Eq.UNKNOWN:
        report.unverified.append((inputs, lhs, rhs))


def check_left_regular_band(sample: List[OrderTerm],
                            description: str = "") -> List[LawReport]:
    """Closure, idempotence, associativity and xyx = xy over the sample,
    which must consist of right identities."""
    sample = [normalize(t) for t in sample]
    for t in sample:
        if not right_identity(t, Level.COUNTABLE):
            raise InvalidSample(f"{pretty(t)} is not a right identity")
    desc = description or f"{len(sample)} right-identity terms"
    reports = [LawReport("closure", desc, True),
               LawReport("idempotence", desc, True),
               LawReport("associativity", desc, True),
               LawReport("left-regularity", desc, True)]
    closure, idem, assoc, lreg = reports
    for x in sample:
        for y in sample:
            p = mul_omega(x, y)
            if not right_identity(p, Level.COUNTABLE):
                closure.counterexamples.append(((x, y), p, p))
            _law_check(lreg, (x, y), mul_omega(p, x), p)
        _law_check(idem, (x,), mul_omega(x, x), x)
    for x in sample:
        for y in sample:
            for z in sample:
                _law_check(assoc, (x, y, z),
                           mul_omega(mul_omega(x, y), z),
                           mul_omega(x, mul_omega(y, z)))
    for r in reports:
        r.passed = not r.counterexamples and not r.unverified
    return reports


def _membership_case(terms, level: Level) -> str:
    return "(" + ",".join(
        "S" if right_identity(t, level) else "X\\S" for t in terms) + ")"


def check_semigroup(sample: List[OrderTerm],
                    description: str = "") -> List[LawReport]:
    """Closure and associativity over terms condensing to one class,
    tagging each triple with its membership pattern in S (right identities)
    versus X without S."""
    sample = [normalize(t) for t in sample]
    for t in sample:
        if not condenses_to_one(t, Level.COUNTABLE):
            raise InvalidSample(f"{pretty(t)} does not condense to one class")
    desc = description or f"{len(sample)} terms condensing to a point"
    closure = LawReport("closure", desc, True)
    assoc = LawReport("associativity", desc, True)
    for x in sample:
        for y in sample:
            p = mul_omega(x, y)
            if not condenses_to_one(p, Level.COUNTABLE):
                closure.counterexamples.append(((x, y), p, p))
    for x in sample:
        for y in sample:
            for z in sample:
                case = _membership_case((x, y, z), Level.COUNTABLE)
                assoc.cases_hit[case] = assoc.cases_hit.get(case, 0) + 1
                _law_check(assoc, (x, y, z),
                           mul_omega(mul_omega(x, y), z),
                           mul_omega(x, mul_omega(y, z)))
    for r in (closure, assoc):
        r.passed = not r.counterexamples and not r.unverified
    return [closure, assoc]


@dataclass
class ClosureTable:
    generators: List[OrderTerm]
    level: Level
    cells: List[List[OrderTerm]]  # rows: first factor, columns: second

    def to_csv(self) -> str:
        def quote(s: str) -> str:
            return '"' + s.replace('"', '""') + '"' if any(
                c in s for c in ',"\n') else s

        header = [""] + [pretty(g) for g in self.generators]
        lines = [",".join(quote(h) for h in header)]
        for g, row in zip(self.generators, self.cells):
            lines.append(",".join(
                quote(s) for s in [pretty(g)] + [pretty(c) for c in row]))
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "level": self.level.value,
            "generators": [pretty(g) for g in self.generators],
            "rows": [[pretty(c) for c in row] for row in self.cells],
        }


def closure_table(generators: List[OrderTerm], level: Level) -> ClosureTable:
    gens = [normalize(t) for t in generators]
    for t in gens:
        if not condenses_to_one(t, level):
            raise InvalidSample(f"{pretty(t)} does not condense to one class")
    cells = [[mul_level(a, b, level) for b in gens] for a in gens]
    return ClosureTable(gens, level, cells)
