"""Command-line front end.

Subcommands: ``eval``, ``classify``, ``tfae``, ``check band|semigroup``,
``table``, ``embed``, ``oracle``.  Exit codes: 0 ok, 1 a checked property
is violated, 2 parse error, 3 unsupported fragment.  ``--json`` switches
output to a versioned JSON document.  All randomized commands take a
``--seed`` flag; the default seed is 0, so bare invocations reproduce.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .algebra import (check_left_regular_band, check_semigroup,
                      closure_table)
from .classify import Level, check_tfae, condenses_to_one, profile
from .condense import cc
from .errors import (InvalidSample, NoEndpoint, OrdalgError, ParseError,
                     UnsupportedFragment)
from .embed import NotEmbeddable, embed_into_u
from .generate import sample_terms, terms_to_depth
from .oracle import oracle_report
from .parser import parse, parse_with_flags
from .terms import OrderTerm, pretty

DEFAULT_SEED = 0

OK, VIOLATION, PARSE_ERROR, UNSUPPORTED = 0, 1, 2, 3


def _level(name: str) -> Level:
    return Level.COUNTABLE if name == "cc" else Level.FINITE


def _emit(doc: dict, as_json: bool, text: str) -> None:
    if as_json:
        doc = {"schema": 1, **doc}
        print(json.dumps(doc, indent=2))
    else:
        print(text)


def _cmd_eval(args) -> int:
    term, flags = parse_with_flags(args.expr)
    if flags is None:
        res = cc(term, Level.COUNTABLE)
        flags = (res.merge_left, res.merge_right)
    _emit({
        "input": args.expr,
        "normalized": pretty(term),
        "result": pretty(term),
        "flags": {"mergeLeft": flags[0], "mergeRight": flags[1]},
        "profile": profile(term, Level.COUNTABLE).to_json(),
    }, args.json, pretty(term))
    return OK


def _cmd_classify(args) -> int:
    term = parse(args.expr)
    level = _level(args.level)
    res = cc(term, level)
    prof = profile(term, level)
    text = "\n".join(f"{k}: {v}" for k, v in prof.to_json().items())
    _emit({
        "input": args.expr,
        "normalized": pretty(term),
        "result": pretty(res.quotient),
        "flags": {"mergeLeft": res.merge_left, "mergeRight": res.merge_right},
        "profile": prof.to_json(),
    }, args.json, text)
    return OK


def _cmd_tfae(args) -> int:
    term = parse(args.expr)
    rep = check_tfae(term)
    doc = rep.to_json()
    text = "\n".join(f"{k}: {v}" for k, v in doc.items())
    _emit(doc, args.json, text)
    return OK if rep.consistent else VIOLATION


def _gens(args, predicate) -> List[OrderTerm]:
    if args.gens:
        return [parse(g) for g in args.gens]
    pool = (terms_to_depth(args.depth) if args.depth <= 2
            else sample_terms(args.depth, 400, args.seed))
    return [t for t in pool if predicate(t)]


def _cmd_check(args) -> int:
    if args.what == "band":
        from .classify import right_identity
        sample = _gens(args, lambda t: right_identity(t, Level.COUNTABLE))
        reports = check_left_regular_band(sample)
    else:
        sample = _gens(args, lambda t: condenses_to_one(t, Level.COUNTABLE))
        reports = check_semigroup(sample)
    ok = all(r.passed for r in reports)
    doc = {"checks": [r.to_json() for r in reports], "passed": ok}
    text = "\n".join(
        f"{r.law}: {'pass' if r.passed else 'FAIL'}"
        f" ({len(r.counterexamples)} counterexamples,"
        f" {len(r.unverified)} unverified)" for r in reports)
    _emit(doc, args.json, text)
    return OK if ok else VIOLATION


def _cmd_table(args) -> int:
    gens = [parse(g) for g in args.gens]
    tab = closure_table(gens, _level(args.level))
    if args.format == "csv":
        sys.stdout.write(tab.to_csv())
    else:
        print(json.dumps({"schema": 1, **tab.to_json()}, indent=2))
    return OK


def _cmd_embed(args) -> int:
    term = parse(args.expr)
    res = embed_into_u(term, budget=args.samples, seed=args.seed)
    if isinstance(res, NotEmbeddable):
        _emit({"input": args.expr, "normalized": pretty(res.term),
               "result": "NotEmbeddable", "reason": res.reason},
              args.json, f"NotEmbeddable: {res.reason}")
        return OK
    text = (f"embeds into {res.target}: {len(res.spine_entries)} spine"
            f" entries, {res.verified_pairs} pairs verified")
    _emit({"input": args.expr, **res.to_json()}, args.json, text)
    return OK


def _cmd_oracle(args) -> int:
    term = parse(args.expr)
    rep = oracle_report(term, _level(args.level), args.pairs, args.seed)
    text = (f"{rep['pairs']} pairs checked, "
            f"{len(rep['mismatches'])} mismatches")
    _emit({"input": args.expr, **rep}, args.json, text)
    return OK if not rep["mismatches"] else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ordalg",
        description="Symbolic calculator for linear-order condensations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true",
                       help="emit a JSON document instead of plain text")

    p = sub.add_parser("eval", help="evaluate an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("classify", help="structural profile of a term")
    p.add_argument("expr")
    p.add_argument("--level", choices=("cc", "fc"), default="cc")
    common(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("tfae", help="cross-check right-identity criteria")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=_cmd_tfae)

    p = sub.add_parser("check", help="verify algebraic laws on a sample")
    p.add_argument("what", choices=("band", "semigroup"))
    p.add_argument("--gens", nargs="+", help="explicit generator expressions")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("table", help="multiplication closure table")
    p.add_argument("--gens", nargs="+", required=True)
    p.add_argument("--level", choices=("cc", "fc"), default="cc")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("embed", help="embed a term into U")
    p.add_argument("expr")
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("oracle", help="interval oracle vs class index")
    p.add_argument("expr")
    p.add_argument("--pairs", type=int, default=1000)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--level", choices=("cc", "fc"), default="cc")
    common(p)
    p.set_defaults(func=_cmd_oracle)
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return PARSE_ERROR
    except (UnsupportedFragment, NoEndpoint) as e:
        print(f"unsupported: {e}", file=sys.stderr)
        return UNSUPPORTED
    except (InvalidSample, OrdalgError) as e:
        print(f"violation: {e}", file=sys.stderr)
        return VIOLATION


if __name__ == "__main__":
    sys.exit(main())
