"""Command line entry point.

Subcommands: gen (synthetic dataset), mine (dataset -> rule file),
measures (rule file -> measure CSV), cover (rule file -> cluster report),
experiment (dataset -> full report files), dump-items (item listing).

Exit codes: 0 success, 1 usage error, 2 data error. Diagnostics go to
stderr; results go to files or stdout.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .cover import ClusterMode, cluster_rules, format_cover_report, select_representatives
from .dataset import (IngestConfig, IngestionError, dump_items, generate_synthetic,
                      load_table, write_csv)
from .experiment import (baseline_representatives, emit_report, experiment_from_rules,
                         write_intermediates)
from .measures import MEASURES, write_measures_csv
from .mining import MiningConfig, mine
from .rules_io import RuleFileError, read_rules, write_rules

OUTDIR_ENV = "RULECOVER_OUTDIR"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_top(text: str) -> int | float:
    """"500" means a rule count; "21%" means a fraction of the rule set."""
    text = text.strip()
    if text.endswith("%"):
        try:
            value = float(text[:-1]) / 100.0
        except ValueError:
            raise UsageError(f"--top percentage must be numeric, got {text!r}") from None
        if not 0 < value <= 1:
            raise UsageError(f"--top percentage must be in (0, 100], got {text}")
        return value
    if not text.isdigit() or int(text) == 0:
        raise UsageError(f"--top must be a positive count or a percentage, got {text!r}")
    return int(text)


def _parse_values(text: str) -> int | tuple[int, int]:
    text = text.strip()
    if ".." in text:
        lo, _, hi = text.partition("..")
        return (int(lo), int(hi))
    return int(text)


def _parse_measures(text: str) -> list[str]:
    if text.strip() == "all":
        return list(MEASURES)
    names = [m.strip() for m in text.split(",") if m.strip()]
    unknown = [m for m in names if m not in MEASURES]
    if unknown:
        raise UsageError(f"unknown measures: {', '.join(unknown)}")
    if not names:
        raise UsageError("no measures selected")
    return names


def _mode(text: str) -> ClusterMode:
    return {"by-item": ClusterMode.BY_ITEM,
            "by-exact-consequent": ClusterMode.BY_EXACT_CONSEQUENT}[text]


def _open_out(path: str | None):
    if path is None or path == "-":
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def build_parser() -> _Parser:
    parser = _Parser(prog="rulecover",
                     description="Association rule mining, measures, and cover-based pruning")
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    def add_ingest_flags(p):
        p.add_argument("--delimiter", default=",", help="field delimiter")
        p.add_argument("--missing-token", default="?", help="cell value treated as missing")
        p.add_argument("--no-header", action="store_true",
                       help="input has no header row")

    p = sub.add_parser("gen", formatter_class=fmt, help="write a seeded synthetic dataset")
    p.add_argument("--records", type=int, default=2680, help="number of records")
    p.add_argument("--attributes", type=int, default=71, help="number of attributes")
    p.add_argument("--values", default="2..4", help="values per attribute (N or LO..HI)")
    p.add_argument("--seed", type=int, default=42, help="RNG seed")
    p.add_argument("--output", default=None, help="output CSV (default stdout)")

    p = sub.add_parser("mine", formatter_class=fmt, help="mine association rules")
    p.add_argument("--input", required=True, help="dataset CSV")
    p.add_argument("--min-support", type=float, default=0.3, help="support threshold")
    p.add_argument("--min-confidence", type=float, default=0.8, help="confidence threshold")
    p.add_argument("--output", default=None, help="rule file (default stdout)")
    add_ingest_flags(p)

    p = sub.add_parser("measures", formatter_class=fmt,
                       help="evaluate interestingness measures on a rule file")
    p.add_argument("--input", required=True, help="rule file from `mine`")
    p.add_argument("--measures", default="all", help="comma-separated measure ids or 'all'")
    p.add_argument("--output", default=None, help="measure CSV (default stdout)")

    p = sub.add_parser("cover", formatter_class=fmt,
                       help="cluster rules and extract representative rules")
    p.add_argument("--input", required=True, help="rule file from `mine`")
    p.add_argument("--mode", choices=["by-item", "by-exact-consequent"], default="by-item",
                   help="consequent clustering mode")
    p.add_argument("--threshold", type=float, default=0.02,
                   help="cover threshold (stop once this share is uncovered)")
    p.add_argument("--output", default=None, help="report file (default stdout)")

    p = sub.add_parser("experiment", formatter_class=fmt,
                       help="run the full pruning experiment and emit report files")
    p.add_argument("--input", required=True, help="dataset CSV")
    p.add_argument("--min-support", type=float, default=0.3, help="support threshold")
    p.add_argument("--min-confidence", type=float, default=0.8, help="confidence threshold")
    p.add_argument("--measures", default="all", help="comma-separated measure ids or 'all'")
    p.add_argument("--top", default="100%", help="rules kept per measure (count or N%%)")
    p.add_argument("--mode", choices=["by-item", "by-exact-consequent"], default="by-item",
                   help="consequent clustering mode")
    p.add_argument("--threshold", type=float, default=0.02, help="cover threshold")
    p.add_argument("--output-dir", default=None,
                   help=f"report directory (default ${OUTDIR_ENV} or ./rulecover-out)")
    add_ingest_flags(p)

    p = sub.add_parser("dump-items", formatter_class=fmt,
                       help="list items with their tidset cardinalities")
    p.add_argument("--input", required=True, help="dataset CSV")
    p.add_argument("--output", default=None, help="listing file (default stdout)")
    add_ingest_flags(p)

    return parser


def _ingest_config(args) -> IngestConfig:
    return IngestConfig(delimiter=args.delimiter, missing_token=args.missing_token,
                        has_header=not args.no_header)


def _cmd_gen(args) -> int:
    d = generate_synthetic(args.records, args.attributes, _parse_values(args.values),
                           args.seed)
    out, close = _open_out(args.output)
    try:
        write_csv(d, out)
    finally:
        if close:
            out.close()
    return 0


def _cmd_mine(args) -> int:
    d = load_table(args.input, _ingest_config(args))
    mined = mine(d, MiningConfig(args.min_support, args.min_confidence))
    out, close = _open_out(args.output)
    try:
        write_rules(mined, out)
    finally:
        if close:
            out.close()
    print(f"{len(mined.rules)} rules written", file=sys.stderr)
    return 0


def _cmd_measures(args) -> int:
    names = _parse_measures(args.measures)
    mined = read_rules(args.input)
    out, close = _open_out(args.output)
    try:
        write_measures_csv(mined.rules, mined.n_records, names, out)
    finally:
        if close:
            out.close()
    return 0


def _cmd_cover(args) -> int:
    mined = read_rules(args.input)
    if not mined.rules:
        raise IngestionError("rule file holds no rules")
    clusters = cluster_rules(mined.rules, _mode(args.mode))
    reps = [select_representatives(c, mined.rules, args.threshold) for c in clusters]
    report = format_cover_report(clusters, reps, mined.rules)
    out, close = _open_out(args.output)
    try:
        out.write(report)
    finally:
        if close:
            out.close()
    return 0


def _cmd_experiment(args) -> int:
    names = _parse_measures(args.measures)
    k = _parse_top(args.top)
    out_dir = args.output_dir or os.environ.get(OUTDIR_ENV) or "rulecover-out"
    d = load_table(args.input, _ingest_config(args))
    cfg = MiningConfig(args.min_support, args.min_confidence)
    mined = mine(d, cfg)
    if not mined.rules:
        raise IngestionError(
            f"mining produced zero rules at min_support={cfg.min_support}, "
            f"min_confidence={cfg.min_confidence}"
        )
    report = experiment_from_rules(
        mined.rules, d.n_records, names, k, _mode(args.mode), args.threshold,
        metadata={"min_support": cfg.min_support, "min_confidence": cfg.min_confidence,
                  "dataset": str(args.input)},
    )
    paths = emit_report(report, out_dir)
    paths += write_intermediates(mined, report.baseline, out_dir)
    for path in paths:
        print(path, file=sys.stderr)
    return 0


def _cmd_dump_items(args) -> int:
    d = load_table(args.input, _ingest_config(args))
    out, close = _open_out(args.output)
    try:
        out.write(dump_items(d))
    finally:
        if close:
            out.close()
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "mine": _cmd_mine,
    "measures": _cmd_measures,
    "cover": _cmd_cover,
    "experiment": _cmd_experiment,
    "dump-items": _cmd_dump_items,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (IngestionError, RuleFileError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
