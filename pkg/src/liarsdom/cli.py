"""Command-line front end.

Exit codes: 0 success, 1 verification or theorem failure, 2 usage or input
error, 3 infeasible instance, routing failure, or exhausted budget.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from liarsdom import errors
from liarsdom.embedding import format_embedding, parse_embedding, embed_graph, read_embedding
from liarsdom.generate import random_planar_graph, random_points
from liarsdom.geometry import PointKind, UdgInstance, format_points, parse_points
from liarsdom.graphs import (
    SimpleGraph,
    format_graph,
    format_solution,
    is_dominating,
    is_liars_dominating,
    parse_graph,
    read_graph,
    read_solution,
)
from liarsdom.reduction import format_provenance, reduce
from liarsdom.render import render_embedding, render_points
from liarsdom.solvers import DEFAULT_BUDGET, Status, solve
from liarsdom.theorem import theorem_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3
_KIND_TOKENS = {k.value for k in PointKind}


def sniff(text: str) -> str:
    """Guess the file kind: ``graph``, ``points`` or ``embedding``."""
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] in ("v", "e"):
            return "embedding"
        if len(parts) == 4 and parts[1] in _KIND_TOKENS:
            return "points"
        return "graph"
    return "graph"


def _load(path: str, fmt: str = "auto") -> tuple[str, object]:
    text = Path(path).read_text(encoding="utf-8")
    kind = sniff(text) if fmt == "auto" else fmt
    if kind == "points":
        return kind, parse_points(text, path)
    if kind == "embedding":
        return kind, parse_embedding(text, path)
    return kind, parse_graph(text, path)


def _as_graph(kind: str, obj) -> SimpleGraph:
    if kind == "points":
        return obj.to_graph()
    if kind == "embedding":
        return obj.graph()
    return obj


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def cmd_embed(args) -> int:
    g = read_graph(args.input)
    emb = embed_graph(g, budget=args.budget)
    _emit(format_embedding(emb), args.output)
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = read_graph(args.input)
    emb = read_embedding(args.embedding) if args.embedding else embed_graph(g)
    inst, rmap = reduce(g, emb)
    prov = args.provenance or str(Path(args.output).with_suffix(".prov"))
    Path(args.output).write_text(format_points(inst), encoding="utf-8")
    Path(prov).write_text(format_provenance(rmap), encoding="utf-8")
    print(f"n={rmap.n} l={rmap.l} joints={rmap.j_count} supports={rmap.s_count} points={len(inst)}", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args) -> int:
    kind, obj = _load(args.input, args.format)
    g = _as_graph(kind, obj)
    res = solve(args.problem, g, args.method, args.budget)
    st = res.stats
    print(
        f"status={res.status.value} size={res.size} subsets_examined={st.subsets_examined} "
        f"nodes_expanded={st.nodes_expanded} elapsed={st.elapsed:.3f}s",
        file=sys.stderr,
    )
    if res.status is Status.INFEASIBLE:
        print("infeasible: no solution exists", file=sys.stderr)
        return EXIT_INFEASIBLE
    _emit(format_solution(res.solution), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    kind, obj = _load(args.input, args.format)
    g = _as_graph(kind, obj)
    members = read_solution(args.solution)
    if args.problem == "lds":
        rep = is_liars_dominating(g, members)
    else:
        rep = is_dominating(g, members)
    print(rep.describe())
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_theorem(args) -> int:
    g = read_graph(args.input)
    emb = read_embedding(args.embedding) if args.embedding else None
    rep = theorem_check(g, emb, args.budget)
    print(rep.record())
    print(rep.table())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_render(args) -> int:
    kind, obj = _load(args.input, args.format)
    if kind == "points":
        svg = render_points(obj)
    elif kind == "embedding":
        svg = render_embedding(obj)
    else:
        raise errors.ParseError("render needs an embedding or a points file", path=args.input)
    _emit(svg, args.output)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "graph":
        g, emb = random_planar_graph(args.n, args.seed, args.density)
        _emit(format_graph(g), args.output)
        if args.embedding_out:
            Path(args.embedding_out).write_text(format_embedding(emb), encoding="utf-8")
    else:
        inst: UdgInstance = random_points(args.n, args.seed, args.extent)
        _emit(format_points(inst), args.output)
    return EXIT_OK


def _positive(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="liarsdom", description="Liar's domination on unit disk graphs.")
    sub = p.add_subparsers(dest="command", required=True)
    fmt_choices = ["auto", "graph", "points", "embedding"]

    s = sub.add_parser("embed", help="graph -> grid embedding")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-o", "--output")
    s.add_argument("--budget", type=_positive, default=400, help="routing attempts")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("reduce", help="graph [+ embedding] -> points + provenance")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-e", "--embedding")
    s.add_argument("-o", "--output", required=True)
    s.add_argument("--provenance", help="sidecar path (default: output with .prov suffix)")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("solve", help="graph or points -> solution")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-o", "--output")
    s.add_argument("--format", choices=fmt_choices, default="auto")
    s.add_argument("--problem", choices=["ds", "lds"], default="lds")
    s.add_argument("--method", choices=["brute", "bnb", "greedy"], default="bnb")
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="instance + solution -> report")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-s", "--solution", required=True)
    s.add_argument("--format", choices=fmt_choices, default="auto")
    s.add_argument("--problem", choices=["ds", "lds"], default="lds")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("theorem", help="check the size correspondence on one graph")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-e", "--embedding")
    s.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    s.set_defaults(func=cmd_theorem)

    s = sub.add_parser("render", help="embedding or points -> SVG")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("-o", "--output")
    s.add_argument("--format", choices=fmt_choices, default="auto")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("gen", help="seeded random planar graph or point set")
    s.add_argument("--kind", choices=["graph", "points"], default="graph")
    s.add_argument("-n", "--n", type=_positive, required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--density", type=float, default=0.5)
    s.add_argument("--extent", type=_positive, default=100)
    s.add_argument("-o", "--output")
    s.add_argument("--embedding-out")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "kind", None) == "graph" and args.command == "gen" and args.n < 2:
        print("liarsdom: error: a graph needs at least 2 vertices", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (errors.Infeasible, errors.RoutingFailed, errors.BudgetExceeded) as exc:
        print(f"liarsdom: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except errors.FalsificationCertificate as exc:
        print(f"liarsdom: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (errors.LiarsDomError, OSError) as exc:
        print(f"liarsdom: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
