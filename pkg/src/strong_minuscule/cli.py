"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a computed value disagrees with
a reference value, 2 on bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

from . import expected
from .bruhat import NotMinusculeWeightError, demazure_report
from .cartan import CartanDatum, InvalidTypeError, TypeLabel, build_datum, group_order
from .checks import run_suite
from .minuscule import classify, strong_by_weight
from .stumbo import enumerate_smi
from .weyl import DEFAULT_BUDGET, NotReducedError, ReducedWord, format_word, parse_word

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2
TABLE2_TYPES = ("E6", "E7", "E8", "F4", "G2")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    type_label: str | None = None
    node: int | None = None
    output_format: str = "pretty"
    budget: int = DEFAULT_BUDGET
    parallelism: int = 1

    def __post_init__(self):
        if self.budget < 1:
            raise UsageError("--budget must be at least 1")
        if self.parallelism < 1:
            raise UsageError("--jobs must be at least 1")


# ---------------------------------------------------------------- output

def _emit(fmt: str, header: Sequence[str], rows: list[Sequence], summary: dict,
          out=None):
    out = out or sys.stdout
    if fmt == "json":
        payload = dict(summary)
        payload["rows"] = [dict(zip(header, r)) for r in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif fmt == "tsv":
        out.write("\t".join(header) + "\n")
        for r in rows:
            out.write("\t".join(_cell(c) for c in r) + "\n")
    else:
        widths = [max(len(h), *(len(_cell(r[k])) for r in rows)) if rows else len(h)
                  for k, h in enumerate(header)]
        out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(_cell(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        for k, v in summary.items():
            out.write(f"{k}: {_cell(v)}\n")


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return ",".join(str(x) for x in v)
    return str(v)


def _datum(text: str) -> CartanDatum:
    try:
        return build_datum(text)
    except InvalidTypeError as exc:
        raise UsageError(str(exc)) from None


def _node(datum: CartanDatum, text) -> int:
    try:
        return datum.check_node(int(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _words_sorted(elements) -> list[tuple[int, ...]]:
    return sorted((tuple(w.reduced_word().letters) for w in elements), key=lambda t: (len(t), t))


# ---------------------------------------------------------------- commands

def cmd_classify(cfg: RunConfig, word_text: str) -> int:
    datum = _datum(cfg.type_label)
    try:
        word = ReducedWord(datum, parse_word(word_text))
    except (ValueError, NotReducedError) as exc:
        raise UsageError(str(exc)) from None
    result = classify(word.element())
    lam = None if result.weight is None else list(result.weight.coords)
    node = result.node() if result.is_strong else None
    rows = [(str(datum.label), word.text, result.status.text, lam, node)]
    _emit(cfg.output_format, ("type", "word", "status", "lambda", "node"), rows, {})
    return EXIT_OK


def cmd_enumerate(cfg: RunConfig) -> int:
    datum = _datum(cfg.type_label)
    i = _node(datum, cfg.node)
    if i not in datum.K:
        raise UsageError(
            f"node {i} is not a short simple root of {datum.label} "
            f"(short nodes: {sorted(datum.K)}); SM_i is defined only for those"
        )
    elements = set(enumerate_smi(datum, i))
    words = _words_sorted(elements)
    want = expected.smi_count(datum.label, i)
    brute = None
    if group_order(datum.label) <= cfg.budget:
        brute = strong_by_weight(datum, cfg.budget).get(i, set()) == elements
    ok = (want is None or want == len(elements)) and brute is not False
    rows = [(len(w), format_word(w)) for w in words]
    summary = {"type": str(datum.label), "i": i, "count": len(elements),
               "expected": want, "brute_force_agrees": brute, "pass": ok}
    _emit(cfg.output_format, ("length", "word"), rows, summary)
    return EXIT_OK if ok else EXIT_MISMATCH


def _table2_cell(task: tuple[str, int]) -> tuple[str, int, int]:
    label, i = task
    return label, i, sum(1 for _ in enumerate_smi(build_datum(label), i))


def _map(fn: Callable, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def cmd_table2(cfg: RunConfig) -> int:
    tasks = [(lab, i) for lab in TABLE2_TYPES for i in sorted(build_datum(lab).K)]
    results = {(lab, i): c for lab, i, c in _map(_table2_cell, tasks, cfg.parallelism)}
    rows, ok = [], True
    for lab, i in tasks:
        want = expected.smi_count(TypeLabel.parse(lab), i)
        got = results[(lab, i)]
        ok &= got == want
        rows.append((lab, i, got, want, got == want))
    _emit(cfg.output_format, ("type", "i", "count", "expected", "match"), rows,
          {"cells": len(rows), "pass": ok})
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_demazure(cfg: RunConfig) -> int:
    datum = _datum(cfg.type_label)
    i = _node(datum, cfg.node)
    if i not in datum.K:
        raise UsageError(f"node {i} is not a short simple root of {datum.label}")
    try:
        rep = demazure_report(datum, i)
    except NotMinusculeWeightError as exc:
        raise UsageError(str(exc)) from None
    rows = [(rep.label, rep.i, rep.dimension, rep.smi_count, rep.excess, rep.expected, rep.matches)]
    _emit(cfg.output_format,
          ("type", "i", "dimension", "smi_count", "excess", "expected", "match"), rows, {})
    return EXIT_MISMATCH if rep.matches is False else EXIT_OK


def _verify_one(task: tuple[str, int]) -> list[dict]:
    label, budget = task
    return [r.to_dict() for r in run_suite(build_datum(label), budget)]


def _verify_labels(type_text: str, max_rank_text: str) -> list[str]:
    try:
        max_rank = int(max_rank_text)
    except ValueError:
        raise UsageError(f"MAX_RANK must be an integer, got {max_rank_text!r}") from None
    text = type_text.strip().upper()
    if len(text) == 1:
        lo = {"A": 1, "B": 2, "C": 2, "D": 3, "E": 6, "F": 4, "G": 2}.get(text)
        hi = {"E": 8, "F": 4, "G": 2}.get(text, max_rank)
        if lo is None:
            raise UsageError(f"unknown family {type_text!r}")
        labels = [f"{text}{n}" for n in range(lo, min(hi, max_rank) + 1)]
    else:
        label = _datum(text).label
        if label.rank > max_rank:
            raise UsageError(f"{label} has rank above MAX_RANK={max_rank}")
        labels = [str(label)]
    if not labels:
        raise UsageError(f"no {text} types of rank <= {max_rank}")
    return labels


def cmd_verify(cfg: RunConfig, max_rank: str) -> int:
    labels = _verify_labels(cfg.type_label, max_rank)
    reports = _map(_verify_one, [(lab, cfg.budget) for lab in labels], cfg.parallelism)
    rows, ok = [], True
    for lab, report in zip(labels, reports):
        for r in report:
            ok &= not r["violations"]
            status = "skip" if r["skipped"] else ("pass" if not r["violations"] else "FAIL")
            rows.append((lab, r["check"], r["checked"], len(r["violations"]), status))
    if cfg.output_format == "json":
        json.dump({"pass": ok, "results": [r for rep in reports for r in rep]},
                  sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        _emit(cfg.output_format, ("type", "check", "checked", "violations", "status"), rows,
              {"pass": ok} if cfg.output_format == "pretty" else {})
        if cfg.output_format == "pretty":
            for rep in reports:
                for r in rep:
                    for v in r["violations"][:5]:
                        print(f"  {r['type']} {r['check']}: {v}")
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------- entry point

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json", "pretty"), default="pretty")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="largest group order to enumerate in full (default: %(default)s)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")

    parser = argparse.ArgumentParser(
        prog="strong-minuscule",
        description="Strong minuscule elements of finite Weyl groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("classify", parents=[common], help="classify a reduced word")
    p.add_argument("type")
    p.add_argument("word", help='comma-separated letters, e.g. "3,2,1"; "" for the identity')
    p = sub.add_parser("enumerate", parents=[common], help="list SM_i")
    p.add_argument("type")
    p.add_argument("node")
    sub.add_parser("table2", parents=[common], help="SM_i counts for E6, E7, E8, F4, G2")
    p = sub.add_parser("demazure", parents=[common], help="Demazure module dimension")
    p.add_argument("type")
    p.add_argument("node")
    p = sub.add_parser("verify", parents=[common], help="run the consistency checks")
    p.add_argument("type", help="a family letter (all ranks up to MAX_RANK) or a type such as G2")
    p.add_argument("max_rank")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        cfg = RunConfig(args.command, getattr(args, "type", None), getattr(args, "node", None),
                        args.format, args.budget, args.jobs)
        if args.command == "classify":
            return cmd_classify(cfg, args.word)
        if args.command == "enumerate":
            return cmd_enumerate(cfg)
        if args.command == "table2":
            return cmd_table2(cfg)
        if args.command == "demazure":
            return cmd_demazure(cfg)
        return cmd_verify(cfg, args.max_rank)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
