"""Constructive embeddings into the rationals and into U.

A term embeds into U exactly when it condenses to a single class at the
countable level.  The certificate realizes the embedding concretely: an
uncountable increasing (or decreasing) spine is laid onto the u_alpha
(or -u_alpha) points, the countable order between consecutive spine points
goes into the rational block of that gap, and a purely countable term goes
into the middle rational block.  Where the source order lacks a point at a
spine position (no supremum to send there), the spine entry is a NEW marker
and the whole gap content lives in the block below it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Dict, List, Optional, Tuple, Union

from .classify import Level, card_of, condenses_to_one, is_small
from .cnf import CNF, ZERO
from .errors import UnsupportedFragment, VerificationFailed
from .normalize import has_first, has_last, normalize
from .points import (EQ, LT, SPINE, PointCode, Side, UPoint, compare_points,
                    is_first_code, is_last_code, point_to_json, sample_points)
from .terms import (OMEGA1, OMEGA1_STAR, U_LINE, LexProd, OrderTerm, Sum,
                    pretty)

NEW = "NEW"


@dataclass(frozen=True)
class NotEmbeddable:
    term: OrderTerm
    reason: str


@dataclass
class EmbedCertificate:
    term: OrderTerm
    target: str
    spine_entries: List[Tuple[Union[PointCode, str], UPoint]]
    gap_maps: List[dict]
    verified_pairs: int = 0
    _map: Callable[[PointCode], UPoint] = field(default=None, repr=False)

    def map_point(self, p: PointCode) -> UPoint:
        return self._map(p)

    def to_json(self) -> dict:
        return {
            "term": pretty(self.term),
            "target": self.target,
            "spine": [
                {"source": NEW if src == NEW else point_to_json(src),
                 "image": point_to_json(img)}
                for src, img in self.spine_entries],
            "gaps": self.gap_maps,
            "verifiedPairs": self.verified_pairs,
        }


class _BlockAllocator:
    """Assigns rationals inside one target block, preserving a given source
    comparison, by the same midpoint insertion as the Cantor embedding."""

    def __init__(self, cmp: Callable[[PointCode, PointCode], int]):
        self._cmp = cmp
        self._placed: List[Tuple[PointCode, Fraction]] = []

    def get(self, p: PointCode) -> Fraction:
        lo, hi = 0, len(self._placed)
        while lo < hi:
            mid = (lo + hi) // 2
            c = self._cmp(self._placed[mid][0], p)
            if c == EQ:
                return self._placed[mid][1]
            if c == LT:
                lo = mid + 1
            else:
                hi = mid
        if not self._placed:
            value = Fraction(0)
        elif lo == 0:
            value = self._placed[0][1] - 1
        elif lo == len(self._placed):
            value = self._placed[-1][1] + 1
        else:
            value = (self._placed[lo - 1][1] + self._placed[lo][1]) / 2
        self._placed.insert(lo, (p, value))
        return value


# A locator maps a source code either onto a spine point or into a block.
Location = Tuple[str, Side, CNF]  # ("spine" | "block", side, index)


def _locator(t: OrderTerm) -> Optional[Callable[[PointCode], Location]]:
    """Placement rule for a term condensing to one class, or None when the
    term is countable (whole order into the middle block)."""
    if is_small(card_of(t), Level.COUNTABLE):
        return None
    if t == OMEGA1:
        return lambda p: ("spine", Side.POS, p)
    if t == OMEGA1_STAR:
        return lambda p: ("spine", Side.NEG, p)
    if t == U_LINE:
        def loc_u(p: UPoint) -> Location:
            kind = "spine" if p.slot is SPINE else "block"
            return (kind, p.side, p.index)
        return loc_u
    if isinstance(t, LexProd):
        inner = t.inner
        if t.outer == OMEGA1:
            lead = has_first(inner)

            def loc_w1(p) -> Location:
                ao, ai = p
                if lead and is_first_code(inner, ai):
                    return ("spine", Side.POS, ao)
                return ("block", Side.POS, ao)
            return loc_w1
        if t.outer == OMEGA1_STAR:
            trail = has_last(inner)

            def loc_w1s(p) -> Location:
                ao, ai = p
                if trail and is_last_code(inner, ai):
                    return ("spine", Side.NEG, ao)
                return ("block", Side.NEG, ao)
            return loc_w1s
        if t.outer == U_LINE:
            lead = has_first(inner)
            trail = has_last(inner)

            def loc_up(p) -> Location:
                u, b = p
                if u.slot is SPINE and u.side is Side.POS:
                    if lead and is_first_code(inner, b):
                        return ("spine", Side.POS, u.index)
                    return ("block", Side.POS, u.index)
                if u.slot is SPINE and u.side is Side.NEG:
                    if trail and is_last_code(inner, b):
                        return ("spine", Side.NEG, u.index)
                    return ("block", Side.NEG, u.index)
                return ("block", u.side, u.index)
            return loc_up
    raise UnsupportedFragment(f"no embedding construction for {pretty(t)}")


def _sum_locator(t: Sum) -> Callable[[PointCode], Location]:
    """A sum condensing to one class has at most one uncountable prefix
    (going to the NEG side), countable middles (middle block) and at most
    one uncountable suffix (POS side)."""
    locs: List[Optional[Callable]] = []
    for i, part in enumerate(t.parts):
        if is_small(card_of(part), Level.COUNTABLE):
            locs.append(None)
        else:
            locs.append(_locator(part))
            if 0 < i < len(t.parts) - 1:
                raise UnsupportedFragment(
                    f"uncountable middle part in {pretty(t)}")

    def loc_sum(p) -> Location:
        i, sub = p
        if locs[i] is None:
            return ("block", Side.MID, ZERO)
        return locs[i](sub)
    return loc_sum


def embed_into_u(t: OrderTerm, budget: int = 500, seed: int = 0
                 ) -> Union[EmbedCertificate, NotEmbeddable]:
    """Embed ``t`` into U, or report NotEmbeddable; the certificate is
    checked on ``budget`` sampled pairs before it is returned."""
    t = normalize(t)
    if not condenses_to_one(t, Level.COUNTABLE):
        return NotEmbeddable(
            t, "the countable condensation has more than one class")
    if is_small(card_of(t), Level.COUNTABLE):
        target = "Q(mid)"

        def locate(_p) -> Location:
            return ("block", Side.MID, ZERO)
    elif isinstance(t, Sum):
        locate = _sum_locator(t)
        target = "U"
    else:
        locate = _locator(t)
        target = "U"

    allocators: Dict[Tuple[Side, CNF], _BlockAllocator] = {}

    def cmp(a, b):
        return compare_points(t, a, b)

    def mapper(p: PointCode) -> UPoint:
        kind, side, index = locate(p)
        if kind == "spine":
            return UPoint(side, index, SPINE)
        key = (side, index)
        if key not in allocators:
            allocators[key] = _BlockAllocator(cmp)
        return UPoint(side, index, allocators[key].get(p))

    pts = sample_points(t, max(budget, 2), seed)
    images = [mapper(p) for p in pts]
    verified = 0
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if verified >= budget:
                break
            src = compare_points(t, pts[i], pts[j])
            img = compare_points(U_LINE, images[i], images[j])
            if src != img:
                raise VerificationFailed(
                    f"{pts[i]!r} vs {pts[j]!r}: source {src}, image {img}")
            verified += 1

    entries: List[Tuple[Union[PointCode, str], UPoint]] = []
    seen_spines = set()
    for p, im in zip(pts, images):
        if im.slot is SPINE and (im.side, im.index) not in seen_spines:
            seen_spines.add((im.side, im.index))
            entries.append((p, im))
    gap_maps = []
    for (side, index), alloc in allocators.items():
        gap_maps.append({
            "block": {"side": side.name, "index": str(index)},
            "points": len(alloc._placed),
            "spine": "source" if (side, index) in seen_spines else NEW,
        })
        if side is not Side.MID and (side, index) not in seen_spines:
            # the supremum the source lacks at this gap boundary
            entries.append((NEW, UPoint(side, index, SPINE)))
            seen_spines.add((side, index))
    key = cmp_to_key(lambda a, b: compare_points(U_LINE, a[1], b[1]))
    entries.sort(key=key)
    gap_maps.sort(key=lambda g: (g["block"]["side"], g["block"]["index"]))
    return EmbedCertificate(t, target, entries, gap_maps, verified, mapper)
