"""Command-line front end.

    circsquares count WORD [--circular] [--list-squares]
    circsquares family [table] --k-min 1 --k-max 5
    circsquares verify LEMMA --n-max 14 --sigma 2 [--samples N --seed S]
    circsquares search --n-min 1 --n-max 12 --sigma 2 [--jobs J] [--out FILE]
    circsquares sample --n 40 --sigma 2 --samples 100000

Positions are 0-based.  Exit codes: 0 success, 1 a lemma or formula was
falsified, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import bounds, family, search
from .squares import (
    _circular_texts,
    count_distinct_circular_squares,
    square_texts,
)
from .words import CircularWord, make_word

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return ",".join(_cell(x) for x in v)
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True, separators=(",", ":"))
    return str(v)


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def emit(tables: dict[str, list[dict]], fmt: str, out=None) -> None:
    """Write named tables as one JSON document or as headered TSV blocks."""
    out = out or sys.stdout
    if fmt == "json":
        json.dump(_jsonable(tables), out, sort_keys=False)
        out.write("\n")
        return
    first = True
    for rows in tables.values():
        if not rows:
            continue
        if not first:
            out.write("\n")
        first = False
        cols = list(rows[0])
        out.write("\t".join(cols) + "\n")
        for r in rows:
            out.write("\t".join(_cell(r[c]) for c in cols) + "\n")


def cmd_count(args) -> int:
    try:
        w = make_word(args.word, args.sigma)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if len(w) == 0:
        raise UsageError("word must be nonempty")
    if args.circular:
        cw = CircularWord(w)
        count = count_distinct_circular_squares(cw)
        texts = _circular_texts(cw)
    else:
        texts = square_texts(w.text)
        count = len(texts)
    row = {"word": w.text, "n": len(w), "circular": args.circular, "count": count}
    if args.list_squares:
        row["squares"] = sorted(texts, key=lambda t: (len(t), t))
    emit({"count": [row]}, args.format)
    return EXIT_OK


def cmd_family(args) -> int:
    if args.k_min < 0 or args.k_max < args.k_min:
        raise UsageError(f"need 0 <= k-min <= k-max, got {args.k_min}..{args.k_max}")
    rows, ok = [], True
    for k in range(args.k_min, args.k_max + 1):
        f = family.family_word(k)
        count = count_distinct_circular_squares(f)
        cen = family.census(k)
        matches = (
            count == family.predicted_count(k) == cen.total
            and cen == family.expected_census(k)
        )
        ok &= matches
        rows.append({
            "k": k, "f_k": f.text, "count": count, "length": len(f),
            "no_aa": cen.no_aa, "one_aa": cen.one_aa,
            "two_aa_len_2k3": cen.two_aa_len_2k3, "two_aa_len_2k5": cen.two_aa_len_2k5,
            "full_length": cen.full_length, "predicted": family.predicted_count(k),
            "matches_formula": matches,
        })
    emit({"family": rows}, args.format)
    return EXIT_OK if ok else EXIT_FALSIFIED


def cmd_verify(args) -> int:
    if args.n_max < 0 or args.samples < 0:
        raise UsageError("n-max and samples must be non-negative")
    if not 1 <= args.sigma <= 26:
        raise UsageError(f"sigma must be in 1..26, got {args.sigma}")
    min_len = bounds.LEMMAS[args.lemma][0]
    if args.samples and args.sample_max_len < min_len:
        raise UsageError(f"{args.lemma} needs --sample-max-len >= {min_len}")
    rep = bounds.verify_lemma(
        args.lemma, args.n_max, args.sigma, args.samples, args.seed, args.sample_max_len
    )
    summary = {
        "lemma": rep.lemma, "n_max": rep.n_max, "sigma": rep.sigma,
        "samples": rep.samples, "seed": rep.seed, "sample_max_len": rep.sample_max_len,
        "words_checked": rep.words_checked, "checks": rep.checks, "vacuous": rep.vacuous,
        "counterexamples": len(rep.counterexamples), "passed": rep.passed,
    }
    if args.lemma == "quarter":
        summary["rounding"] = bounds.QUARTER_ROUNDING
    emit(
        {"summary": [summary], "counterexamples": [c.to_dict() for c in rep.counterexamples]},
        args.format,
    )
    return EXIT_OK if rep.passed else EXIT_FALSIFIED


def _record_row(r: search.SearchRecord) -> dict:
    return {
        "n": r.n, "sigma": r.sigma, "quotient": r.quotient, "max_count": r.max_count,
        "density": r.density, "num_maximizers": r.num_maximizers,
        "witnesses": [w.text for w in r.witnesses], "words_examined": r.words_examined,
        "exhaustive": r.exhaustive, "elapsed_ms": r.elapsed_ms,
    }


def cmd_search(args) -> int:
    if args.n_min < 1 or args.n_max < args.n_min:
        raise UsageError(f"need 1 <= n-min <= n-max, got {args.n_min}..{args.n_max}")
    try:
        records = search.search_campaign(
            range(args.n_min, args.n_max + 1), args.sigma, args.jobs, args.out,
            quotient=args.quotient,
            budget=None if args.no_budget else args.budget,
            timing=not args.no_timing,
        )
    except (ValueError, search.BudgetExceeded, search.CorruptCampaignFile, OSError) as exc:
        raise UsageError(str(exc)) from exc
    emit({"search": [_record_row(r) for r in records]}, args.format)
    return EXIT_OK


def cmd_sample(args) -> int:
    try:
        rec = search.sample_square_density(args.n, args.sigma, args.samples, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    emit({"sample": [_record_row(rec)]}, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circsquares", description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")

    p = sub.add_parser("count", help="count distinct squares in a word")
    p.add_argument("word")
    p.add_argument("--circular", action="store_true", help="treat the word as a necklace")
    p.add_argument("--list-squares", action="store_true")
    p.add_argument("--sigma", type=int, default=None,
                   help="alphabet size (default: smallest alphabet containing the word)")
    add_format(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("family", help="the f_k family table with its square census")
    p.add_argument("action", nargs="?", choices=("table",), default="table")
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=5)
    add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="sweep words looking for lemma counterexamples")
    p.add_argument("lemma", choices=sorted(bounds.LEMMAS))
    p.add_argument("--n-max", type=int, default=12, help="exhaustive up to this length")
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--samples", type=int, default=0, help="additional random words")
    p.add_argument("--sample-max-len", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="exhaustive maximum over necklaces")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--quotient", choices=sorted(search.QUOTIENTS), default="none")
    p.add_argument("--out", default=None, help="CSV file; resumed if it already exists")
    p.add_argument("--budget", type=int, default=search.DEFAULT_BUDGET,
                   help="refuse lengths with more necklaces than this")
    p.add_argument("--no-budget", action="store_true", help="disable the budget guard")
    p.add_argument("--no-timing", action="store_true",
                   help="write elapsed_ms as 0 for byte-reproducible files")
    add_format(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sample", help="non-exhaustive random probe at one length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--samples", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    add_format(p)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"circsquares {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
