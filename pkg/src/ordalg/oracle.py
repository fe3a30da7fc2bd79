"""Agreement check between the class index and the interval oracle.

Two points fall in the same condensation class exactly when the interval
between them is small at the level.  ``class_index`` decides the left side
through the quotient construction; ``interval_class`` counts cardinalities
directly from the term structure.  The two computations share no code
path, so their agreement is a meaningful cross-check.
"""

from __future__ import annotations

import random
from typing import List

from .classify import Level, is_small
from .normalize import normalize
from .points import interval_class, point_to_json, sample_points
from .quotientmap import class_index
from .terms import OrderTerm, pretty


def oracle_report(t: OrderTerm, level: Level, pairs: int, seed: int) -> dict:
    """Check ``pairs`` seeded point pairs of ``t``; report mismatches."""
    t = normalize(t)
    # 60 points give ample distinct pairs without slowing large runs
    pts = sample_points(t, min(max(2 * pairs, 8), 60), seed)
    rng = random.Random(seed)
    mismatches: List[dict] = []
    checked = 0
    if len(pts) >= 2:
        classes = [class_index(t, p, level) for p in pts]
        while checked < pairs:
            a, b = rng.sample(range(len(pts)), 2)
            p, q = pts[a], pts[b]
            same = classes[a] == classes[b]
            small = is_small(interval_class(t, p, q), level)
            if same != small:
                mismatches.append({
                    "p": point_to_json(p), "q": point_to_json(q),
                    "sameClass": same, "smallInterval": small,
                })
            checked += 1
    return {
        "term": pretty(t),
        "level": level.value,
        "pairs": checked,
        "mismatches": mismatches,
    }
