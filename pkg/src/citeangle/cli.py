"""Command line interface.

    citeangle classify --input FILE [--format auto|wide|long] [--config FILE] [--out DIR]
    citeangle stats    --input FILE [--by-category]
    citeangle curve    --input FILE --paper ID [--lines peaks|all-peaks] --out FILE
    citeangle generate --spec FILE --n N --seed S --out FILE

Exit codes: 0 success, 1 input error, 2 config error.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

from . import __version__
from .classify import ConfigError, load_config
from .report import classify_corpus, emit_curve_data, format_curve, format_stats, to_csv, to_json
from .series import DEFAULT_MIN_YEARS, Corpus, SeriesError, read_corpus, shift_zero, write_corpus
from .synth import GenSpec, generate_corpus

logger = logging.getLogger("citeangle")

EXIT_OK, EXIT_INPUT, EXIT_CONFIG = 0, 1, 2


def _jobs(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1")
    return n


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("--input", required=True, help="citation CSV (long or wide)")
    p.add_argument("--format", default="auto", choices=("auto", "wide", "long"))
    p.add_argument("--zero-fill", action="store_true",
                   help="treat missing years inside a series as zero citations")
    p.add_argument("--zero-offset", type=int, default=0, choices=(0, 1),
                   help="years between publication and the time origin")


def _add_classify_opts(p: argparse.ArgumentParser):
    p.add_argument("--config", help="JSON file with threshold overrides")
    p.add_argument("--min-years", type=int, default=DEFAULT_MIN_YEARS,
                   help="skip series with fewer than this many years after publication")
    p.add_argument("--jobs", type=_jobs, default=None, help="worker processes (default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="citeangle", description="Citation angle analysis")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify every series in a corpus")
    _add_input(p)
    _add_classify_opts(p)
    p.add_argument("--out", help="output directory (default: CSV table on stdout)")
    p.add_argument("--emit", default="both", choices=("both", "json", "csv"))

    p = sub.add_parser("stats", help="tier totals, optionally per category")
    _add_input(p)
    _add_classify_opts(p)
    p.add_argument("--by-category", action="store_true")

    p = sub.add_parser("curve", help="plot data for one series")
    _add_input(p)
    p.add_argument("--paper", required=True)
    p.add_argument("--lines", default="peaks", choices=("peaks", "all-peaks"))
    p.add_argument("--out", required=True)

    p = sub.add_parser("generate", help="synthetic corpus in wide format")
    p.add_argument("--spec", help="JSON generator spec (defaults when omitted)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=_jobs, default=1)
    return parser


def _load(args) -> Corpus:
    corpus = read_corpus(args.input, args.format, zero_fill=args.zero_fill)
    if args.zero_offset:
        corpus = Corpus([shift_zero(s, args.zero_offset) for s in corpus])
    return corpus


def _classify(args):
    config = load_config(args.config)
    corpus = _load(args)
    return classify_corpus(corpus, config, min_years=args.min_years, jobs=args.jobs)


def cmd_classify(args) -> int:
    report = _classify(args)
    if args.out is None:
        sys.stdout.write(to_csv(report))
    else:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        if args.emit in ("both", "json"):
            (out / "report.json").write_text(to_json(report), encoding="utf-8")
        if args.emit in ("both", "csv"):
            (out / "report.csv").write_text(to_csv(report), encoding="utf-8")
    for item in report.skipped:
        logger.warning("skipped %s: %s", item["paper_id"], "; ".join(item["reasons"]))
    return EXIT_OK


def cmd_stats(args) -> int:
    report = _classify(args)
    sys.stdout.write(format_stats(report, by_category=args.by_category))
    return EXIT_OK


def cmd_curve(args) -> int:
    corpus = _load(args)
    try:
        series = corpus[args.paper]
    except KeyError:
        raise SeriesError(f"paper {args.paper!r} not in {args.input}") from None
    header, rows = emit_curve_data(series, lines=args.lines)
    Path(args.out).write_text(format_curve(header, rows), encoding="utf-8")
    return EXIT_OK


def cmd_generate(args) -> int:
    try:
        spec = GenSpec.load(args.spec) if args.spec else GenSpec()
        generated = generate_corpus(spec, args.n, args.seed, jobs=args.jobs)
    except (OSError, ValueError, TypeError, json.JSONDecodeError) as exc:
        raise ConfigError(f"bad generator spec: {exc}") from exc
    write_corpus(generated.corpus, args.out, "wide")
    meta = {"seed": args.seed, "n": args.n, "spec": spec.to_dict(), "planted": generated.planted}
    Path(_meta_path(args.out)).write_text(json.dumps(meta, indent=2) + "\n", encoding="utf-8")
    return EXIT_OK


def _meta_path(out) -> str:
    root, _ = os.path.splitext(str(out))
    return root + ".meta.json"


COMMANDS = {"classify": cmd_classify, "stats": cmd_stats, "curve": cmd_curve,
            "generate": cmd_generate}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    logging.captureWarnings(True)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (SeriesError, OSError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
