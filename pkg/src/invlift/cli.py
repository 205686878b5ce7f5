"""invlift command line: tables, single-element queries, verification suites.

Exit codes: 0 success, 1 a verification/comparison failed, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .lifting import Halving, b_recursive, canonical_halving, colon, colon_branch_rule, r_recursive
from .rational_points import build_lift, frobenius, make_field, normalizer_mul, special_c
from .root_datum import build_root_datum
from .tables import SECTIONS, compare_section, compute_section
from .verify import SUITES, SuiteConfig, run_suite
from .weyl_group import DEFAULT_BUDGET, BudgetExceeded, WeylElem, enumerate_involutions, parse_word, word_str


class UsageError(Exception):
    pass


def _ints(v) -> list[int]:
    return [int(x) for x in v]


def _element(label: str, text: str) -> WeylElem:
    d = build_root_datum(label)
    try:
        word = parse_word(text, d.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    w = WeylElem.from_word(d, word)
    if w.length != len(word):
        raise UsageError(f"{text!r} is not reduced (length {w.length}, reduced word {word_str(w.word)})")
    if not w.is_involution():
        raise UsageError(f"{text!r} is not an involution: w^2 = {word_str((w * w).word)}")
    return w


def _halving(label: str, text: str | None) -> Halving:
    d = build_root_datum(label)
    if text is None:
        return canonical_halving(d)
    try:
        part = frozenset(parse_word(text, d.rank)) if text not in ("", "{}") else frozenset()
        h = Halving(part, d.rank)
        h.validate(d)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return h


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


# ---------------------------------------------------------------- commands

def cmd_tables(args) -> int:
    try:
        table = compute_section(args.section, args.type)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    doc = {"section": args.section, "table": table}
    status = 0
    if args.compare:
        cmp = compare_section(args.section, args.type)
        doc["matches_reference"] = cmp
        status = 0 if all(cmp.values()) else 1
    if args.json:
        _emit(doc)
        return status
    for label, val in table.items():
        print(f"{label}:")
        if isinstance(val, dict):
            for k, v in val.items():
                print(f"  {k}: {v}")
        elif val and isinstance(val[0], list):
            for row in val:
                print(f"  {row}")
        else:
            print(f"  {val}")
        if args.compare:
            print(f"  reference: {'match' if doc['matches_reference'][label] else 'MISMATCH'}")
    return status


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        samples=args.samples, seed=args.seed, budget=args.budget, prime=args.prime,
        workers=args.workers, mode=args.mode,
    )
    reports = []
    for label in args.type.split(","):
        build_root_datum(label)
        reports.append(run_suite(args.suite, label, cfg))
    if args.json:
        _emit({"config": asdict(cfg), "reports": [r.to_dict() for r in reports]})
    else:
        for r in reports:
            print(r.summary())
            for wit in r.witnesses:
                print(f"  w = {wit['word']}: {'; '.join(wit['failures'])}")
            for msg in r.global_failures:
                print(f"  {msg}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_rw(args) -> int:
    w = _element(args.type, args.word)
    _emit({"type": args.type, "w": word_str(w.word), "r": _ints(r_recursive(w))})
    return 0


def cmd_bw(args) -> int:
    w = _element(args.type, args.word)
    h = _halving(args.type, args.halving)
    _emit({"type": args.type, "w": word_str(w.word), "halving": sorted(h.subset), "b": _ints(b_recursive(w, h))})
    return 0


def cmd_colon(args) -> int:
    w = _element(args.type, args.word)
    if not 1 <= args.s <= w.datum.rank:
        raise UsageError(f"s must lie in 1..{w.datum.rank}")
    if not w.commutes_with_simple(args.s):
        raise UsageError(f"s{args.s} does not commute with w")
    out = {"type": args.type, "w": word_str(w.word), "s": args.s, "colon": colon(w, args.s)}
    d = w.datum
    if d.is_simply_laced(d.component_of(args.s)):
        out["branch_rule"] = colon_branch_rule(w, args.s)
    _emit(out)
    return 0


def cmd_lift(args) -> int:
    w = _element(args.type, args.word)
    h = _halving(args.type, args.halving)
    out = {
        "type": args.type,
        "w": word_str(w.word),
        "halving": sorted(h.subset),
        "r": _ints(r_recursive(w)),
        "b": _ints(b_recursive(w, h)),
    }
    if args.prime is not None:
        try:
            ctx = make_field(args.prime)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        c = special_c(ctx)
        n = build_lift(w, c, h)
        out["field"] = {"p": ctx.p, "delta_squared": ctx.d}
        out["c"] = repr(c)
        out["torus"] = [repr(x) for x in n.t.coords]
        out["phi_n_times_n_is_1"] = normalizer_mul(frobenius(n), n).is_identity()
    _emit(out)
    return 0


def cmd_involutions(args) -> int:
    d = build_root_datum(args.type)
    if args.samples:
        invs = list(enumerate_involutions(d, mode="sampled", n=args.samples, seed=args.seed))
    else:
        invs = list(enumerate_involutions(d, budget=args.budget))
    words = [word_str(w.word) for w in invs]
    if args.json:
        _emit({"type": args.type, "count": len(words), "involutions": words})
    else:
        print(f"{args.type}: {len(words)} involutions")
        for wd in words:
            print(wd)
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="invlift", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="computed reference tables")
    t.add_argument("section", choices=SECTIONS)
    t.add_argument("--type", help="restrict to one type")
    t.add_argument("--compare", action="store_true", help="diff against the bundled reference copy")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_tables)

    v = sub.add_parser("verify", help="run a property suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--type", required=True, help="type label, or a comma-separated list")
    v.add_argument("--prime", type=int, default=3)
    v.add_argument("--samples", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max |W| for exhaustive runs")
    v.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    for name, fn, extra in (("rw", cmd_rw, ()), ("bw", cmd_bw, ("halving",)),
                            ("lift", cmd_lift, ("halving", "prime")), ("colon", cmd_colon, ("s",))):
        e = sub.add_parser(name, help=f"{name} for one involution")
        e.add_argument("--type", required=True)
        e.add_argument("word", help="reduced word: 121, 1,2,1 or e")
        if "halving" in extra:
            e.add_argument("--halving", help="S' as a list of simple indices, e.g. 1,3")
        if "prime" in extra:
            e.add_argument("--prime", type=int, help="evaluate at c with c^p = -c over F_{p^2}")
        if "s" in extra:
            e.add_argument("--s", type=int, required=True)
        e.set_defaults(func=fn)

    i = sub.add_parser("involutions", help="list involutions by reduced word")
    i.add_argument("--type", required=True)
    i.add_argument("--samples", type=int, default=0, help="sample instead of enumerating")
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=cmd_involutions)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, BudgetExceeded) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"invlift: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
