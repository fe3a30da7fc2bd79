"""Deterministic term generation for exhaustive and randomized checks.

Depth is expression-tree height: atoms have depth 1; a Sum or LexProd of
two depth-1 terms has depth 2; and so on.  All outputs are normalized, so
the generated sets are sets of normal forms.  Exhaustive enumeration is
practical through depth 2; depth 3 is covered by seeded sampling.
"""

from __future__ import annotations

import itertools
import random
from typing import List

from .normalize import normalize
from .terms import (EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, OrderTerm, Sum)

GEN_ATOMS = (ONE, FinChain(2), FinChain(3), OMEGA, OMEGA_STAR, ZETA, ETA,
             OMEGA1, OMEGA1_STAR, OMEGA2, OMEGA2_STAR, U_LINE)


def terms_to_depth(depth: int, atoms=GEN_ATOMS) -> List[OrderTerm]:
    """All distinct normal forms of height at most ``depth``, built from
    binary sums and products over the atoms, in deterministic order."""
    seen = dict.fromkeys(normalize(a) for a in atoms)
    layer = list(seen)
    for _ in range(depth - 1):
        nxt = []
        for a, b in itertools.product(layer, repeat=2):
            for t in (Sum((a, b)), LexProd(a, b)):
                n = normalize(t)
                if n != EMPTY and n not in seen:
                    seen[n] = None
                    nxt.append(n)
        layer = nxt
    return list(seen)


def sample_terms(depth: int, count: int, seed: int,
                 atoms=GEN_ATOMS) -> List[OrderTerm]:
    """``count`` distinct normal forms sampled from random terms of height
    at most ``depth``; deterministic for a fixed seed."""
    rng = random.Random(seed)

    def build(d: int) -> OrderTerm:
        if d <= 1 or rng.random() < 0.2:
            return rng.choice(atoms)
        a, b = build(d - 1), build(d - 1)
        return Sum((a, b)) if rng.random() < 0.5 else LexProd(a, b)

    seen = dict.fromkeys(normalize(a) for a in atoms)
    out = list(seen)
    attempts = 0
    while len(out) < count and attempts < count * 200:
        attempts += 1
        n = normalize(build(depth))
        if n != EMPTY and n not in seen:
            seen[n] = None
            out.append(n)
    return out[:count]
