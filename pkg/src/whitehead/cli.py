"""Command-line front end: ``whitehead factorize|minimize|subbasis|graph|batch``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, TextIO

from .algorithm import (
    change_basis,
    class_subbasis_test,
    cutvertex_algorithm,
    is_cutvertex_free,
    make_strategy,
    minimizing_algorithm,
    subbasis_test,
)
from .errors import InvariantError, WhiteheadError
from .factorization import allot, fibers, finest_partition
from .grammar import format_relator, format_relators, format_word, parse_input
from .graph import build_graph, cutvertex_scan, dot_lines, vertex_key, vertex_label
from .words import BasisState, ConjClass, Element, total_length, x_support

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2

COMMANDS = ("factorize", "minimize", "subbasis", "graph", "batch")


@dataclass
class RunConfig:
    command: str
    strategy: str = "lex"
    seed: Optional[int] = None
    format: str = "json"
    trace: bool = False
    max_iters: Optional[int] = None
    rank: Optional[int] = None
    each: str = "factorize"

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.format == "dot" and self.command != "graph":
            raise ValueError("--format dot is only valid for the graph command")


def _basis_json(basis: BasisState) -> List[Dict[str, str]]:
    return [
        {"name": n, "over_original": format_word(w)}
        for n, w in zip(basis.names, basis.over_original)
    ]


def run_factorize(cfg: RunConfig, rank: int, relators) -> Dict[str, Any]:
    strategy = make_strategy(cfg.strategy, cfg.seed)
    report, _ = cutvertex_algorithm(
        BasisState.identity(rank), relators, strategy, max_iters=cfg.max_iters
    )
    out = report.to_dict(include_trace=cfg.trace)
    out["strategy"] = cfg.strategy
    return out


def run_minimize(cfg: RunConfig, rank: int, relators) -> Dict[str, Any]:
    start = BasisState.identity(rank)
    basis = minimizing_algorithm(start, relators)
    rewritten = change_basis(relators, start, basis)
    return {
        "rank": rank,
        "basis": _basis_json(basis),
        "relators": [format_relator(r) for r in relators],
        "rewritten": [format_relator(r, basis.names) for r in rewritten],
        "total_length": {"initial": total_length(relators), "final": total_length(rewritten)},
        "cutvertex_free": is_cutvertex_free(basis, rewritten),
    }


def run_subbasis(cfg: RunConfig, rank: int, relators) -> Dict[str, Any]:
    strategy = make_strategy(cfg.strategy, cfg.seed)
    basis = BasisState.identity(rank)
    if relators and all(isinstance(r, ConjClass) for r in relators):
        kind = "class"
        ok, report = class_subbasis_test(relators, basis, strategy)
    elif all(isinstance(r, Element) for r in relators):
        kind = "element"
        ok, report = subbasis_test(relators, basis, strategy)
    else:
        raise WhiteheadError("subbasis needs all elements or all conjugacy classes")
    return {"subbasis": ok, "kind": kind, "witness": report.to_dict(include_trace=cfg.trace)}


def graph_blocks(rank: int, relators) -> List[Dict[str, Any]]:
    p = finest_partition(rank, (x_support(r) for r in relators))
    fib = fibers(allot(relators, p))
    blocks = []
    for b in p.blocks:
        ids = fib.get(min(b), [])
        g = build_graph(relators[i] for i in ids)
        blocks.append({"block": min(b), "generators": sorted(b), "relators": ids, "graph": g})
    return blocks


def run_graph_json(cfg: RunConfig, rank: int, relators) -> Dict[str, Any]:
    out = []
    for blk in graph_blocks(rank, relators):
        g = blk["graph"]
        scan = cutvertex_scan(g)
        out.append({
            "block": blk["block"],
            "generators": [format_word((x + 1,)) for x in blk["generators"]],
            "relators": blk["relators"],
            "vertices": [vertex_label(v) for v in g.ordered_vertices()],
            "edges": [
                [vertex_label(u), vertex_label(v)]
                for u, v in sorted(g.edges, key=lambda e: (vertex_key(e[0]), vertex_key(e[1])))
            ],
            "cutvertices": [vertex_label(v) for v in sorted(scan, key=vertex_key)],
            "legal_cutvertices": [vertex_label(v) for v in sorted(scan, key=vertex_key) if v != 0],
        })
    return {"rank": rank, "relators": [format_relator(r) for r in relators], "blocks": out}


def run_graph_dot(cfg: RunConfig, rank: int, relators) -> str:
    blocks = [b for b in graph_blocks(rank, relators) if b["graph"].edges]
    name = format_relators(relators)
    if len(blocks) == 1:
        return "\n".join(dot_lines(blocks[0]["graph"], name)) + "\n"
    quoted = name.replace("\\", "\\\\").replace('"', '\\"')
    lines = [f'graph "{quoted}" {{']
    for blk in blocks:
        sub = dot_lines(blk["graph"], f"cluster_{blk['block']}", indent="  ")
        sub[0] = sub[0].replace("graph", "subgraph", 1)
        lines += sub
    lines.append("}")
    return "\n".join(lines) + "\n"


def _text(cmd: str, result: Dict[str, Any]) -> str:
    if cmd == "factorize":
        parts = []
        for f in result["factors"]:
            parts.append("⟨" + ", ".join(g["over_original"] for g in f["generators"]) + "⟩")
        lines = ["F = " + " * ".join(parts)]
        for a in result["allotment"]:
            lines.append(f"  {a['input']} -> factor {a['block']} as {a['rewritten']}")
        t = result["total_length"]
        lines.append(f"  length {t['initial']} -> {t['final']} in {result['iterations']} step(s)")
        return "\n".join(lines)
    if cmd == "minimize":
        basis = ", ".join(f"{g['name']} = {g['over_original']}" for g in result["basis"])
        t = result["total_length"]
        return f"basis: {basis}\nrelators: {' '.join(result['rewritten'])}\nlength {t['initial']} -> {t['final']}"
    if cmd == "subbasis":
        verdict = "is" if result["subbasis"] else "is not"
        return f"input {verdict} a sub-basis\n" + _text("factorize", result["witness"])
    if cmd == "graph":
        lines = []
        for b in result["blocks"]:
            lines.append(f"block {b['block']} <{', '.join(b['generators'])}>: "
                         f"{len(b['vertices'])} vertices, {len(b['edges'])} edges")
            for u, v in b["edges"]:
                lines.append(f"  {u} -- {v}")
            lines.append(f"  legal cutvertices: {' '.join(b['legal_cutvertices']) or 'none'}")
        return "\n".join(lines)
    return json.dumps(result)


RUNNERS = {
    "factorize": run_factorize,
    "minimize": run_minimize,
    "subbasis": run_subbasis,
    "graph": run_graph_json,
}


def run_one(cfg: RunConfig, text: str, command: str | None = None):
    command = command or cfg.command
    rank, relators = parse_input(text, cfg.rank)
    if command == "graph" and cfg.format == "dot":
        return run_graph_dot(cfg, rank, relators)
    return RUNNERS[command](cfg, rank, relators)


def run_batch(cfg: RunConfig, text: str, out: TextIO) -> int:
    status = EXIT_OK
    for n, line in enumerate(text.splitlines()):
        record: Dict[str, Any] = {"line": n, "input": line}
        try:
            record["result"] = run_one(cfg, line, cfg.each)
            record["ok"] = True
        except InvariantError as exc:
            record.update(ok=False, error=str(exc), kind="internal")
            status = EXIT_INTERNAL
        except (WhiteheadError, ValueError) as exc:
            record.update(ok=False, error=str(exc), kind="input")
            status = max(status, EXIT_INPUT)
        out.write(json.dumps(record) + "\n")
    return status


def run(cfg: RunConfig, text: str, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    if cfg.command == "batch":
        return run_batch(cfg, text, out)
    try:
        result = run_one(cfg, text)
    except InvariantError as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL
    except (WhiteheadError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT
    if isinstance(result, str):
        out.write(result)
    elif cfg.format == "text":
        out.write(_text(cfg.command, result) + "\n")
    else:
        out.write(json.dumps(result, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="whitehead",
        description="Free-product factorizations of free groups relative to "
        "elements and conjugacy classes.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("words", nargs="*", help="relators, e.g. 'abA [abab]'")
    parser.add_argument("--rank", type=int, help="rank of the free group")
    parser.add_argument("--strategy", choices=("lex", "first", "random"), default="lex")
    parser.add_argument("--seed", type=int, help="seed for --strategy random")
    parser.add_argument("--format", choices=("json", "text", "dot"), default="json")
    parser.add_argument("--trace", action="store_true", help="include the descent trace")
    parser.add_argument("--max-iters", type=int, help="hard cap on descent steps")
    parser.add_argument("--input", help="read relators from a file")
    parser.add_argument(
        "--each", choices=("factorize", "minimize", "subbasis", "graph"), default="factorize",
        help="command applied to every line in batch mode",
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command, strategy=args.strategy, seed=args.seed,
            format=args.format, trace=args.trace, max_iters=args.max_iters,
            rank=args.rank, each=args.each,
        )
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    if args.input:
        with open(args.input) as fh:
            text = fh.read()
    elif args.words:
        text = (" " if args.command != "batch" else "\n").join(args.words)
    else:
        text = sys.stdin.read()
    return run(cfg, text)


if __name__ == "__main__":
    sys.exit(main())
