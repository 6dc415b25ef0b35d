"""Command-line front end.

Exit codes: 0 when the graph inherits (or all diff trials agree), 1 when it
violates (or some trial disagrees), 2 on input or usage errors.  Reports go to
stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Optional, Sequence

from .checkers import DecisionReport, decide_inheritance
from .corpus import random_trial
from .graph import (
    GraphFormatError,
    WeightedGraph,
    format_graph,
    min_weight_edges,
    parse_graph,
    vertex_set,
)
from .oracle import SUBSET_CAP, inheritance_oracle, partition_criterion
from .pmin import Game, pmin_partition, restricted_value

EXIT_INHERITS, EXIT_VIOLATES, EXIT_ERROR = 0, 1, 2
DEFAULT_CAP = 9


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _load_graph(args) -> WeightedGraph:
    if args.graph is not None and args.input is not None:
        raise UsageError("give either --input or --graph, not both")
    if args.graph is not None:
        text = args.graph.replace("\\n", "\n")
    elif args.input is None or args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror or exc}")
    return parse_graph(text)


# -- check -----------------------------------------------------------------


def render_report_text(report: DecisionReport) -> str:
    lines = [f"verdict: {report.verdict}", f"graph: n={report.n} m={report.m}"]
    for s in report.stages:
        timing = "" if s.millis is None else f" ({s.millis} ms)"
        lines.append(f"  {s.name:<14} {s.status}{timing}")
    if report.violation is not None:
        lines.append("violation: " + json.dumps(report.violation.to_dict()))
    return "\n".join(lines)


def cmd_check(args) -> int:
    g = _load_graph(args)
    report = decide_inheritance(g, timings=args.timings)
    if args.format == "json":
        print(_dump_json(report.to_dict()))
    else:
        print(render_report_text(report))
    return EXIT_INHERITS if report.inherits else EXIT_VIOLATES


# -- oracle ----------------------------------------------------------------


def oracle_report(g: WeightedGraph, criterion: str) -> dict:
    if criterion == "partition":
        witness = partition_criterion(g)
        payload = None if witness is None else witness.to_dict()
    else:
        witness = inheritance_oracle(g)
        payload = None if witness is None else witness.to_dict()
    return {
        "verdict": "INHERITS" if witness is None else "VIOLATES",
        "criterion": criterion,
        "witness": payload,
        "graph": {"n": g.n, "m": g.m},
    }


def cmd_oracle(args) -> int:
    g = _load_graph(args)
    if g.n > args.cap:
        raise UsageError(f"n = {g.n} exceeds the oracle cap {args.cap}")
    report = oracle_report(g, args.criterion)
    if args.format == "json":
        print(_dump_json(report))
    else:
        print(f"verdict: {report['verdict']} ({report['criterion']})")
        print(f"graph: n={g.n} m={g.m}")
        if report["witness"] is not None:
            print("witness: " + json.dumps(report["witness"]))
    return EXIT_INHERITS if report["witness"] is None else EXIT_VIOLATES


# -- diff ------------------------------------------------------------------


@dataclass(frozen=True)
class TrialOutcome:
    trial: int
    graph: WeightedGraph
    checker: DecisionReport
    oracle_inherits: bool

    @property
    def agree(self) -> bool:
        return self.checker.inherits == self.oracle_inherits


def run_diff(
    trials: int,
    seed: int,
    palette: Sequence[int],
    cap: int,
    decide: Callable[[WeightedGraph], DecisionReport] = decide_inheritance,
) -> list[TrialOutcome]:
    """Checker vs oracle on ``trials`` seeded random graphs with ``3 <= n <= cap``."""
    out = []
    for t in range(trials):
        g = random_trial(seed, t, (3, cap), palette)
        out.append(TrialOutcome(t, g, decide(g), inheritance_oracle(g) is None))
    return out


def _dump_disagreement(directory: Path, outcome: TrialOutcome) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    stem = directory / f"trial_{outcome.trial:05d}"
    stem.with_suffix(".txt").write_text(format_graph(outcome.graph), encoding="utf-8")
    oracle = oracle_report(outcome.graph, "delta")
    stem.with_suffix(".json").write_text(
        _dump_json({"checker": outcome.checker.to_dict(), "oracle": oracle}) + "\n",
        encoding="utf-8",
    )


def cmd_diff(args, decide=decide_inheritance) -> int:
    outcomes = run_diff(args.trials, args.seed, args.palette, args.cap, decide)
    bad = [o for o in outcomes if not o.agree]
    if args.dump_dir is not None:
        for o in bad:
            _dump_disagreement(Path(args.dump_dir), o)
    summary = {
        "trials": len(outcomes),
        "agree": len(outcomes) - len(bad),
        "seed": args.seed,
        "palette": list(args.palette),
        "cap": args.cap,
        "disagreements": [
            {
                "trial": o.trial,
                "graph": format_graph(o.graph),
                "checker": o.checker.verdict,
                "oracle": "INHERITS" if o.oracle_inherits else "VIOLATES",
            }
            for o in bad
        ],
    }
    if args.format == "json":
        print(_dump_json(summary))
    else:
        print(f"{summary['agree']}/{summary['trials']} agree")
        for d in summary["disagreements"]:
            print(f"trial {d['trial']}: checker {d['checker']}, oracle {d['oracle']}")
    return EXIT_INHERITS if not bad else EXIT_VIOLATES


# -- partition -------------------------------------------------------------


def cmd_partition(args) -> int:
    g = _load_graph(args)
    try:
        members = vertex_set(g, args.subset) if args.subset is not None else tuple(g.vertices)
        carrier = vertex_set(g, args.unanimity) if args.unanimity is not None else None
    except ValueError as exc:
        raise UsageError(str(exc))
    if not members:
        raise UsageError("the subset must be nonempty")
    sigma = min_weight_edges(g, members)
    blocks = list(pmin_partition(g, members))
    report = {
        "subset": list(members),
        "sigma": [[u, v, g.weight(u, v)] for u, v in sigma],
        "blocks": [list(b) for b in blocks],
    }
    if carrier is not None:
        if not carrier:
            raise UsageError("the unanimity carrier must be nonempty")
        report["unanimity"] = list(carrier)
        report["value"] = restricted_value(g, Game.unanimity_game(g.n, carrier), members)
    if args.format == "json":
        print(_dump_json(report))
    else:
        print("subset: " + " ".join(map(str, members)))
        print("min-weight edges: " + (", ".join(f"{u}-{v}:{w}" for u, v, w in report["sigma"]) or "none"))
        print("blocks: " + " | ".join(" ".join(map(str, b)) for b in blocks))
        if carrier is not None:
            print(f"restricted value: {report['value']}")
    return EXIT_INHERITS


# -- parser ----------------------------------------------------------------


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--input", metavar="PATH", help="edge-list file ('-' for stdin)")
    p.add_argument("--graph", metavar="TEXT", help="inline edge list; '\\n' separates lines")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmin-inherit",
        description="Decide whether F-convexity is inherited by P_min-restricted games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the polynomial decision procedure")
    _add_graph_args(p)
    _add_format(p)
    p.add_argument("--timings", action="store_true", help="record per-stage wall time")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="run the exhaustive oracle")
    _add_graph_args(p)
    _add_format(p)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--criterion", choices=("delta", "partition"), default="delta")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("diff", help="checker vs oracle on random graphs")
    _add_format(p)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--palette", type=_int_list, default=[1, 2, 3])
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest vertex count sampled")
    p.add_argument("--dump-dir", metavar="DIR", help="write disagreeing graphs and reports here")
    p.set_defaults(func=cmd_diff)

    p = sub.add_parser("partition", help="show P_min(A) and the restricted value")
    _add_graph_args(p)
    _add_format(p)
    p.add_argument("--subset", type=_int_list, help="coalition A (default: all vertices)")
    p.add_argument("--unanimity", type=_int_list, help="carrier S of a unanimity game")
    p.set_defaults(func=cmd_partition)
    return parser


def _validate(args) -> None:
    cap = getattr(args, "cap", None)
    if cap is not None and not 3 <= cap <= SUBSET_CAP:
        raise UsageError(f"--cap must lie in [3, {SUBSET_CAP}]")
    if getattr(args, "trials", 1) < 1:
        raise UsageError("--trials must be at least 1")
    palette = getattr(args, "palette", None)
    if palette is not None and (not palette or min(palette) < 1):
        raise UsageError("--palette must list positive integers")
    seed = getattr(args, "seed", 0)
    if not -(1 << 63) <= seed < (1 << 64):
        raise UsageError("--seed must fit in 64 bits")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_INHERITS
    try:
        _validate(args)
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
