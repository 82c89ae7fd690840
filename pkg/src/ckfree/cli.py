"""Command-line interface.

Subcommands: gen-t, gen-h, verify, circumference, bounds, lemma-check.

Exit codes: 0 success / verdict true; 1 verdict false; 2 domain or usage
error; 3 parse error; 4 inconclusive (budget exhausted).  Default search
budgets can be overridden with the CKFREE_NODE_LIMIT and CKFREE_TIME_LIMIT
environment variables.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import codec
from .certify import (
    SearchBudget,
    certify_ck_free_brute,
    certify_ck_free_structural,
    longest_cycle,
    longest_path_between,
)
from .construction import (
    DomainError,
    ResourceError,
    build_construction,
    moon_moser,
)
from .embedding import EmbeddedGraph, GraphStructureError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_DOMAIN = 2
EXIT_PARSE = 3
EXIT_INCONCLUSIVE = 4


def _budget(args: argparse.Namespace) -> SearchBudget:
    nodes = args.node_limit
    seconds = args.time_limit
    if nodes is None:
        nodes = int(os.environ.get("CKFREE_NODE_LIMIT", 10**8))
    if seconds is None:
        seconds = float(os.environ.get("CKFREE_TIME_LIMIT", 600.0))
    return SearchBudget(node_limit=nodes, time_limit=seconds)


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit_graph(g: EmbeddedGraph, labels: dict[str, int], fmt: str, out: str | None) -> None:
    if fmt == "g6":
        _write(out, codec.encode_graph6(g) + "\n")
    elif fmt == "planar":
        _write(out, codec.encode_planar(g, labels))
    elif fmt == "dot":
        _write(out, codec.export_dot(g, labels))
    else:
        raise DomainError(f"unknown format {fmt!r}")


def _load_graph(path: str, fmt: str | None) -> EmbeddedGraph:
    text = Path(path).read_text()
    if fmt is None:
        fmt = "g6" if path.endswith(".g6") else "planar"
    if fmt == "planar":
        return codec.decode_planar(text)[0]
    n, edges = codec.decode_graph6(text)
    # rebuild an arbitrary rotation system; fine for abstract-graph searches
    rot: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        rot[u].append(v)
        rot[v].append(u)
    outer = (0, rot[0][0]) if n and rot[0] else (0, 0)
    return EmbeddedGraph(tuple(tuple(r) for r in rot), outer)


def _h_labels(h) -> dict[str, int]:
    labels = {"x": h.x, "y": h.y}
    for j, (wj, zj) in enumerate(zip(h.w, h.z), start=1):
        if wj is not None:
            labels[f"w{j}"] = wj
        labels[f"z{j}"] = zj
    return labels


def cmd_gen_t(args) -> int:
    t = moon_moser(args.level)
    _emit_graph(t.graph, {"x": t.x, "y": t.y, "z": t.z}, args.format, args.out)
    return EXIT_OK


def cmd_gen_h(args) -> int:
    h = build_construction(args.n, args.k)
    _emit_graph(h.graph, _h_labels(h), args.format, args.out)
    plan = {
        "n": h.plan.n,
        "k": h.plan.k,
        "i": h.plan.i,
        "s": h.plan.s,
        "v_s": h.plan.v_s,
        "edges": h.graph.edge_count,
    }
    sidecar = args.plan_out
    if sidecar is None and args.out not in (None, "-"):
        sidecar = args.out + ".plan.json"
    if sidecar is not None:
        _write(sidecar, json.dumps(plan, indent=2) + "\n")
    elif args.out in (None, "-"):
        sys.stdout.write(json.dumps(plan) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    budget = _budget(args)
    args.mode_given = args.mode is not None
    if args.mode is None:
        args.mode = "brute" if args.input is not None else "structural"
    if args.input is not None:
        if args.k is None:
            raise DomainError("--k is required with --input")
        if args.mode == "structural" and args.mode_given:
            raise DomainError("structural mode needs --n/--k (it rebuilds the blocks)")
        g = _load_graph(args.input, args.input_format)
        from .certify import has_cycle_of_length

        cyc = longest_cycle(g, budget)
        hit = has_cycle_of_length(g, args.k, budget)
        verdict = hit.conclusive and hit.certificate is None
        conclusive = cyc.conclusive and hit.conclusive
        report = {
            "mode": "brute",
            "k": args.k,
            "circumference": cyc.length,
            "verdict": verdict,
            "conclusive": conclusive,
            "lemma_backed": False,
        }
    else:
        if args.n is None or args.k is None:
            raise DomainError("need either --input or both --n and --k")
        h = build_construction(args.n, args.k)
        if args.mode == "brute":
            r = certify_ck_free_brute(h, budget)
        else:
            r = certify_ck_free_structural(h, budget, lemma_backed=args.lemma_backed)
        report = {
            "mode": r.mode,
            "n": args.n,
            "k": r.k,
            "circumference": r.circumference,
            "verdict": r.verdict,
            "conclusive": r.conclusive,
            "lemma_backed": r.lemma_backed,
            "witness": list(r.witness.vertices) if r.witness else None,
        }
        verdict, conclusive = r.verdict, r.conclusive
    if args.json:
        print(json.dumps(report))
    else:
        state = "inconclusive" if not conclusive else ("C_k-free" if verdict else "NOT C_k-free")
        print(
            f"k={report['k']} circumference={report['circumference']} -> {state}"
            + (" [lemma-backed]" if report["lemma_backed"] else "")
        )
    if not conclusive:
        return EXIT_INCONCLUSIVE
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_circumference(args) -> int:
    g = _load_graph(args.input, args.input_format)
    out = longest_cycle(g, _budget(args))
    if out.certificate is None:
        print("no cycle found" + ("" if out.conclusive else " (inconclusive)"))
    else:
        flag = "" if out.conclusive else " (inconclusive lower bound)"
        print(f"circumference {out.length}{flag}")
        print("cycle: " + " ".join(str(v) for v in out.certificate.vertices))
    return EXIT_OK if out.conclusive else EXIT_INCONCLUSIVE


def cmd_bounds(args) -> int:
    k_values = list(range(args.k_min, args.k_max + 1))
    if args.n:
        n_values = args.n
    else:
        if args.n_min is None or args.n_max is None:
            raise DomainError("give --n values or an --n-min/--n-max range")
        import math

        count = args.n_count
        if count <= 1:
            n_values = [args.n_min]
        else:
            lo, hi = math.log(args.n_min), math.log(args.n_max)
            n_values = sorted(
                {round(math.exp(lo + (hi - lo) * t / (count - 1))) for t in range(count)}
            )
    rows = bounds_mod.bounds_table(k_values, n_values)
    _write(args.out, bounds_mod.bounds_csv(rows))
    return EXIT_OK


def cmd_lemma_check(args) -> int:
    budget = _budget(args)
    ok = True
    conclusive = True
    print("level  vertices  cycle  expect  path  expect  status")
    for i in range(args.i_min, args.i_max + 1):
        t = moon_moser(i)
        want_cycle = 7 * 2 ** (i - 2)
        want_path = 3 * 2 ** (i - 1)
        cyc = longest_cycle(t.graph, budget)
        pat = longest_path_between(t.graph, t.x, t.y, budget)
        if not (cyc.conclusive and pat.conclusive):
            status = "INCONCLUSIVE"
            conclusive = False
        elif cyc.length == want_cycle and pat.length == want_path:
            status = "PASS"
        else:
            status = "FAIL"
            ok = False
        print(
            f"{i:5d}  {t.graph.n:8d}  {cyc.length:5d}  {want_cycle:6d}"
            f"  {pat.length:4d}  {want_path:6d}  {status}"
        )
    if not ok:
        return EXIT_FALSE
    return EXIT_OK if conclusive else EXIT_INCONCLUSIVE


def _add_budget_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--node-limit", type=int, default=None, help="search node budget")
    p.add_argument("--time-limit", type=float, default=None, help="search seconds budget")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ckfree",
        description="Build and certify cycle-free extremal planar graphs.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-t", help="emit the level-i recursive triangulation")
    p.add_argument("--level", "-i", type=int, required=True)
    p.add_argument("--out", "-o", default=None)
    p.add_argument("--format", "-f", choices=("g6", "planar", "dot"), default="planar")
    p.set_defaults(func=cmd_gen_t)

    p = sub.add_parser("gen-h", help="emit the glued construction H(n, k)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", "-o", default=None)
    p.add_argument("--format", "-f", choices=("g6", "planar", "dot"), default="planar")
    p.add_argument("--plan-out", default=None, help="sidecar JSON path for the block plan")
    p.set_defaults(func=cmd_gen_h)

    p = sub.add_parser("verify", help="certify absence of k-cycles")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--input", default=None, help="graph file instead of --n/--k")
    p.add_argument("--input-format", choices=("g6", "planar"), default=None)
    p.add_argument("--mode", choices=("structural", "brute"), default=None,
                   help="default: structural for --n/--k, brute for --input")
    p.add_argument("--lemma-backed", action="store_true",
                   help="fall back to closed-form block values on budget exhaustion")
    p.add_argument("--json", action="store_true")
    _add_budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("circumference", help="exact longest cycle of a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--input-format", choices=("g6", "planar"), default=None)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_circumference)

    p = sub.add_parser("bounds", help="emit the bound-comparison CSV table")
    p.add_argument("--k-min", type=int, default=7)
    p.add_argument("--k-max", type=int, default=14)
    p.add_argument("--n", type=int, action="append", default=None,
                   help="explicit n value (repeatable)")
    p.add_argument("--n-min", type=int, default=None)
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--n-count", type=int, default=50,
                   help="log-spaced sample count for the n range")
    p.add_argument("--out", "-o", default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("lemma-check", help="verify block cycle/path values by search")
    p.add_argument("--i-min", type=int, default=2)
    p.add_argument("--i-max", type=int, default=3)
    _add_budget_flags(p)
    p.set_defaults(func=cmd_lemma_check)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        return args.func(args)
    except codec.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DomainError, ResourceError, GraphStructureError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
