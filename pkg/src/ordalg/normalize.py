"""Term normalization and end-element surgery.

Normalization applies, to a fixpoint: sum flattening and Empty elimination,
unit and zero laws for the product, reversal pushdown, right-nesting of
products, canonicalization of ordinal-shaped (and reversed-ordinal-shaped)
subterms, absorption of smaller ordinals into an adjacent ``w2``, and the
collapse ``w* + n + w -> z``.
"""

from __future__ import annotations

from typing import List

from .errors import NoEndpoint
from .ordinal import render_parts, reversed_term_value, term_value
from .terms import (EMPTY, ETA, OMEGA, OMEGA1, OMEGA1_STAR, OMEGA2,
                    OMEGA2_STAR, OMEGA_STAR, ONE, U_LINE, ZETA, FinChain,
                    LexProd, OrderTerm, Rev, Sum, fin, reverse)


def has_first(t: OrderTerm) -> bool:
    """Does ``t`` have a least element?  ``t`` must be normalized."""
    if t == EMPTY:
        return False
    if t in (ONE, OMEGA, OMEGA1, OMEGA2):
        return True
    if t in (OMEGA_STAR, OMEGA1_STAR, OMEGA2_STAR, ZETA, ETA, U_LINE):
        return False
    if isinstance(t, FinChain):
        return True
    if isinstance(t, Sum):
        return has_first(t.parts[0])
    if isinstance(t, LexProd):
        return has_first(t.outer) and has_first(t.inner)
    raise TypeError(f"unknown term {t!r}")


def has_last(t: OrderTerm) -> bool:
    """Does ``t`` have a greatest element?  ``t`` must be normalized."""
    return has_first(reverse(t))


def right_discrete(t: OrderTerm) -> bool:
    """Does every non-greatest element of ``t`` have an immediate
    successor?"""
    if t in (EMPTY, ONE, OMEGA, OMEGA_STAR, ZETA, OMEGA1, OMEGA2):
        return True
    if t in (ETA, U_LINE, OMEGA1_STAR, OMEGA2_STAR):
        return False
    if isinstance(t, FinChain):
        return True
    if isinstance(t, Sum):
        if not all(right_discrete(p) for p in t.parts):
            return False
        # the last element of a part needs a first element right after it
        return all(has_first(nxt) or not has_last(prev)
                   for prev, nxt in zip(t.parts, t.parts[1:]))
    if isinstance(t, LexProd):
        if not right_discrete(t.inner):
            return False
        if not has_last(t.inner):
            return True
        return has_first(t.inner) and right_discrete(t.outer)
    raise TypeError(f"unknown term {t!r}")


def left_discrete(t: OrderTerm) -> bool:
    """Does every non-least element of ``t`` have an immediate
    predecessor?"""
    return right_discrete(reverse(t))


def normalize(t: OrderTerm) -> OrderTerm:
    """Rewrite ``t`` to normal form.  Idempotent."""
    if isinstance(t, Rev):
        return normalize(reverse(t.arg))
    if isinstance(t, Sum):
        return _norm_sum([normalize(p) for p in t.parts])
    if isinstance(t, LexProd):
        return _norm_lex(normalize(t.outer), normalize(t.inner))
    return t


def _canonicalize(t: OrderTerm) -> OrderTerm:
    """Rewrite a single (already structurally normalized) node to its
    canonical ordinal or reversed-ordinal shape, when it has one."""
    v = term_value(t)
    if v is not None:
        parts = render_parts(v)
        return _assemble(parts)
    rv = reversed_term_value(t)
    if rv is not None:
        parts = [reverse(p) for p in reversed(render_parts(rv))]
        return _assemble(parts)
    return t


def _assemble(parts: List[OrderTerm]) -> OrderTerm:
    if not parts:
        return EMPTY
    if len(parts) == 1:
        return parts[0]
    return Sum(tuple(parts))


def _norm_lex(a: OrderTerm, b: OrderTerm) -> OrderTerm:
    if a == EMPTY or b == EMPTY:
        return EMPTY
    if a == ONE:
        return b
    if b == ONE:
        return a
    if isinstance(a, LexProd):  # (x*y)*b == x*(y*b)
        return _norm_lex(a.outer, _norm_lex(a.inner, b))
    prod = LexProd(a, b)
    res = _canonicalize(prod)
    if res != prod:
        return res
    if a == ZETA and isinstance(b, FinChain):
        return ZETA  # z blocks of a finite chain are a copy of z
    if isinstance(b, Sum):
        absorbed = _absorb_product_ends(a, b)
        if absorbed is not None:
            return absorbed
    return prod


def _absorb_product_ends(a: OrderTerm, b: Sum):
    """``a*(d + c) == a*d (+ c)`` when ``c + d == d`` and ``a`` is
    right-discrete: the trailing c of each copy merges into the next copy.
    The mirror rewrite applies to a left-discrete ``a``."""
    if right_discrete(a):
        c = b.parts[-1]
        d = _norm_sum(list(b.parts[:-1]))
        if _norm_sum([c, d]) == d:
            head = _norm_lex(a, d)
            return _norm_sum([head, c]) if has_last(a) else head
    if left_discrete(a):
        h = b.parts[0]
        d = _norm_sum(list(b.parts[1:]))
        if _norm_sum([d, h]) == d:
            tail = _norm_lex(a, d)
            return _norm_sum([h, tail]) if has_first(a) else tail
    return None


def _norm_sum(raw_parts: List[OrderTerm]) -> OrderTerm:
    parts: List[OrderTerm] = []
    for p in raw_parts:
        if isinstance(p, Sum):
            parts.extend(p.parts)
        elif p != EMPTY:
            parts.append(p)
    for _ in range(40):  # passes reach a fixpoint long before this bound
        new = _sum_pass(parts)
        if new == parts:
            break
        parts = new
    else:
        raise RuntimeError("sum normalization did not converge")
    return _assemble(parts)


def _is_finite_part(p: OrderTerm) -> bool:
    return p == ONE or isinstance(p, FinChain)


def _fin_size(p: OrderTerm) -> int:
    return 1 if p == ONE else p.n


def _sum_pass(parts: List[OrderTerm]) -> List[OrderTerm]:
    # merge adjacent finite chains
    out: List[OrderTerm] = []
    for p in parts:
        if out and _is_finite_part(p) and _is_finite_part(out[-1]):
            out[-1] = fin(_fin_size(out[-1]) + _fin_size(p))
        else:
            out.append(p)
    out = _rewrite_runs(out, term_value, lambda v: render_parts(v))
    # a run of reversed-ordinal parts denotes the reverse of the sum of the
    # parts' mirror values taken right to left
    out = _rewrite_runs(
        out, reversed_term_value,
        lambda v: [reverse(p) for p in reversed(render_parts(v))],
        fold_right=True)
    out = _absorb_into_omega2(out)
    out = _absorb_into_products(out)
    out = _collapse_zeta(out)
    # a rewrite may have produced nested sums or empties
    flat: List[OrderTerm] = []
    for p in out:
        if isinstance(p, Sum):
            flat.extend(p.parts)
        elif p != EMPTY:
            flat.append(p)
    return flat


def _rewrite_runs(parts, value_of, render, fold_right=False):
    """Replace each maximal run of parts recognized by ``value_of`` with its
    canonical rendering, when that differs."""
    out: List[OrderTerm] = []
    run: List[OrderTerm] = []
    run_values = []

    def flush():
        if not run:
            return
        ordered = run_values[::-1] if fold_right else run_values
        total = ordered[0]
        for v in ordered[1:]:
            total = total + v
        canonical = render(total)
        out.extend(canonical if canonical != run else run)
        run.clear()
        run_values.clear()

    for p in parts:
        v = value_of(p)
        if v is None:
            flush()
            out.append(p)
        else:
            run.append(p)
            run_values.append(v)
    flush()
    return out


def _absorb_into_omega2(parts):
    # alpha + w2 == w2 for every ordinal alpha below w2, and mirrored
    out: List[OrderTerm] = []
    for p in parts:
        if p == OMEGA2:
            while out and term_value(out[-1]) is not None:
                out.pop()
        out.append(p)
    res: List[OrderTerm] = []
    for p in reversed(out):
        if p == OMEGA2_STAR:
            while res and reversed_term_value(res[-1]) is not None:
                res.pop()
        res.append(p)
    res.reverse()
    return res


def _absorb_into_products(parts):
    # a part following a product whose outer factor has a last element glues
    # onto the product's last copy when that copy absorbs it, and mirrored
    out: List[OrderTerm] = []
    for p in parts:
        if out and isinstance(out[-1], LexProd) and has_last(out[-1].outer):
            x = out[-1].inner
            if _norm_sum([x, p]) == x:
                continue
        out.append(p)
    res: List[OrderTerm] = []
    for p in reversed(out):
        if res and isinstance(res[-1], LexProd) and has_first(res[-1].outer):
            x = res[-1].inner
            if _norm_sum([p, x]) == x:
                continue
        res.append(p)
    res.reverse()
    return res


def _collapse_zeta(parts):
    # w* + n + w  and  w* + w  are copies of the integers
    out: List[OrderTerm] = []
    i = 0
    while i < len(parts):
        if parts[i] == OMEGA_STAR:
            j = i + 1
            if j < len(parts) and _is_finite_part(parts[j]):
                j += 1
            if j < len(parts) and parts[j] == OMEGA:
                out.append(ZETA)
                i = j + 1
                continue
        out.append(parts[i])
        i += 1
    return out


def detach_last(t: OrderTerm) -> OrderTerm:
    """The order type of ``t`` with its greatest element removed."""
    if not has_last(t):
        raise NoEndpoint(f"{t} has no last element")
    if t == ONE:
        return EMPTY
    if isinstance(t, FinChain):
        return fin(t.n - 1)
    if t in (OMEGA_STAR, OMEGA1_STAR, OMEGA2_STAR):
        return t  # removing the top point shifts the reversed ordinal onto itself
    if isinstance(t, Sum):
        return _norm_sum([*t.parts[:-1], detach_last(t.parts[-1])])
    if isinstance(t, LexProd):
        shortened = _norm_lex(detach_last(t.outer), t.inner)
        return _norm_sum([shortened, detach_last(t.inner)])
    raise NoEndpoint(f"{t} has no last element")


def detach_first(t: OrderTerm) -> OrderTerm:
    """The order type of ``t`` with its least element removed."""
    return normalize(reverse(detach_last(reverse(t))))
