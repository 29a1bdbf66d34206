"""Command-line interface: ``localwl <command> ...``.

Every command prints one JSON report on stdout.  Reports are deterministic;
wall-clock timing is only included with ``--timing``.

Exit codes: 0 success (``compare``: Equivalent), 1 ``compare`` Distinguished
or a ``verify`` mismatch, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import corpus
from .counting import (
    PATTERN_NAMES,
    closed_form_star_and_matching,
    count_c4_subgraph,
    count_pattern,
    count_triangles_fast,
    get_pattern,
)
from .errors import CapacityError, GraphInputError, InvariantViolation, ParseError
from .fragmentation import SmallPatternId, clique_lift, frag_count, ind_count_le4, partition_check
from .generators import gen_random
from .graph import Graph, extract_ball
from .io import FORMATS, dumps_report, read_graph, serialize_graph
from .local_wl import VARIANTS, compare_local, layer_kwl_batch, local_kwl, recursive_12_wl
from .oracle import oracle_count
from .wl import refine_batch

THREADS_ENV = "LOCALWL_THREADS"
GRAPH_SUFFIXES = (".txt", ".edges", ".el", ".g6", ".graph6")


class UsageError(Exception):
    pass


def _load(path: str, fmt: str | None) -> Graph:
    return read_graph(path, fmt)


def _hist(h) -> list[list[int]]:
    return [[c, m] for c, m in h.items]


# ---------------------------------------------------------------------------
# commands


def cmd_refine(args) -> tuple[dict, int]:
    g = _load(args.graph, args.format)
    out: dict = {}
    if args.variant == "plain":
        col = refine_batch([g], args.k)[0]
        out.update(histogram=_hist(col.histogram()), vertex_colors=col.vertex_colors(),
                   iterations=col.iteration, stable=col.stable)
    elif args.variant == "recursive12":
        col = recursive_12_wl(g)
        out.update(histogram=_hist(col.histogram()), vertex_colors=col.vertex_colors(),
                   iterations=col.iteration, stable=col.stable)
    elif args.variant == "local":
        sig = local_kwl(g, args.k, _radius(args))
        out.update(attributes=[_hist(a) for a in sig.attributes], classes=sig.classes())
    else:
        states = layer_kwl_batch([extract_ball(g, v, _radius(args)) for v in range(g.n)], args.k)
        out.update(layers=[[_hist(h) for h in s.histograms] for s in states])
    return out, 0


def _radius(args) -> int:
    if args.r is None:
        raise UsageError(f"--r is required for variant {args.variant!r}")
    return args.r


def cmd_compare(args) -> tuple[dict, int]:
    g1 = _load(args.graph1, args.format)
    g2 = _load(args.graph2, args.format)
    r = args.r if args.variant in ("local", "layer") else None
    if args.variant in ("local", "layer") and r is None:
        raise UsageError(f"--r is required for variant {args.variant!r}")
    verdict = compare_local(g1, g2, args.variant, args.k, r)
    return {"verdict": verdict.value}, 0 if verdict.value == "Equivalent" else 1


def _fast_count(g: Graph, name: str, mode: str) -> int:
    if mode == "induced":
        try:
            pid = SmallPatternId(name)
        except ValueError:
            raise UsageError(f"no fast induced method for {name!r}; "
                             f"available: {', '.join(p.value for p in SmallPatternId)}") from None
        return ind_count_le4(g)[pid]
    if name == "triangle":
        return count_triangles_fast(g)
    if name == "c4":
        return count_c4_subgraph(g)
    if name == "k4":
        return clique_lift(g)
    if name == "2k2":
        return closed_form_star_and_matching(g, 2)[1]
    stars = {"edge": 1, "p3": 2, "star3": 3}
    if name.startswith("star:"):
        s = get_pattern(name).size - 1
    elif name in stars:
        s = stars[name]
    else:
        raise UsageError(f"no fast subgraph method for {name!r}; "
                         "available: triangle, c4, k4, 2k2, edge, p3, star3, star:s")
    return closed_form_star_and_matching(g, s)[0]


def cmd_count(args) -> tuple[dict, int]:
    g = _load(args.graph, args.format)
    p = get_pattern(args.pattern)
    if args.method == "local":
        return {"report": count_pattern(g, p, args.mode).to_dict()}, 0
    if args.method == "oracle":
        total = oracle_count(g, p, args.mode)
    else:
        total = _fast_count(g, args.pattern, args.mode)
    return {"report": {"pattern": p.name, "mode": args.mode, "total": total}}, 0


def cmd_frag(args) -> tuple[dict, int]:
    g = _load(args.graph, args.format)
    if args.all4:
        counts = ind_count_le4(g)
        return {"counts": {p.value: c for p, c in counts.items()},
                "partition_check": partition_check(g, counts)}, 0
    if args.target is None:
        raise UsageError("frag needs --all4 or --target paw|diamond|star3")
    return {"target": args.target, "count": frag_count(g, args.target)}, 0


def cmd_gen(args) -> tuple[dict, int]:
    fmt = args.format or "edge-list"
    written = []
    graphs = [(args.seed + i, gen_random(args.n, args.p, args.seed + i)) for i in range(args.count)]
    if args.out is None:
        if args.count != 1:
            raise UsageError("--count > 1 needs --out DIR")
        sys.stdout.write(serialize_graph(graphs[0][1], fmt))
        return {}, 0
    out = Path(args.out)
    suffix = ".g6" if fmt == "graph6" else ".txt"
    if args.count == 1 and out.suffix:
        targets = [out]
    else:
        out.mkdir(parents=True, exist_ok=True)
        targets = [out / f"gnp-n{args.n}-p{args.p}-s{seed}{suffix}" for seed, _ in graphs]
    for path, (seed, g) in zip(targets, graphs):
        path.write_text(serialize_graph(g, fmt))
        written.append({"path": str(path), "seed": seed, "n": g.n, "m": g.m})
    return {"written": written}, 0


def _verify_one(item: tuple[str, str, dict | None]) -> dict:
    path, name, golden = item
    check = corpus.check_graph(read_graph(path), name, golden)
    return {"name": name, "ok": check.ok, "mismatches": check.mismatches, "golden": check.golden()}


def thread_count(cli_value: int | None) -> int:
    if cli_value is not None:
        return max(1, cli_value)
    env = os.environ.get(THREADS_ENV)
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"{THREADS_ENV} must be an integer, got {env!r}") from None
    return 1


def cmd_verify(args) -> tuple[dict, int]:
    root = Path(args.corpus)
    if not root.is_dir():
        raise UsageError(f"corpus directory {root} does not exist")
    files = sorted(p for p in root.iterdir() if p.suffix in GRAPH_SUFFIXES)
    if not files:
        raise UsageError(f"no graph files in {root}")
    golden_path = root / "golden.json"
    golden = json.loads(golden_path.read_text()) if golden_path.exists() and not args.write_golden else {}
    items = [(str(p), p.name, golden.get(p.name)) for p in files]
    threads = thread_count(args.threads)
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_verify_one, items))
    else:
        results = [_verify_one(it) for it in items]
    if args.write_golden:
        golden_path.write_text(dumps_report({r["name"]: r["golden"] for r in results}))
    missing = [p.name for p in files if not args.write_golden and p.name not in golden]
    mismatches = [m for r in results for m in r["mismatches"]]
    report = {
        "files": len(files),
        "golden": "written" if args.write_golden else ("present" if golden else "absent"),
        "missing_golden": missing,
        "mismatches": mismatches,
        "ok": not mismatches,
    }
    return report, 0 if not mismatches else 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="localwl", description="Localized WL refinement and exact subgraph counting.")
    parser.add_argument("--timing", action="store_true", help="add elapsed wall-clock seconds to the report")
    parser.add_argument("--format", choices=FORMATS, default=None,
                        help="graph file format (default: by suffix, .g6 is graph6)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("refine", help="stable coloring or localized signature of one graph")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--variant", choices=VARIANTS, default="plain")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("graph")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("compare", help="WL verdict on two graphs (exit 0 Equivalent, 1 Distinguished)")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--variant", choices=VARIANTS, default="plain")
    p.add_argument("--r", type=int, default=None)
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("count", help="count a library pattern")
    p.add_argument("--pattern", required=True, help=f"one of: {', '.join(PATTERN_NAMES)}")
    p.add_argument("--mode", choices=("subgraph", "induced"), default="subgraph")
    p.add_argument("--method", choices=("local", "oracle", "fast"), default="local")
    p.add_argument("graph")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("frag", help="induced counts through fragmentation")
    p.add_argument("--all4", action="store_true", help="all 17 graphs on 2 to 4 vertices")
    p.add_argument("--target", choices=("paw", "diamond", "star3"), default=None)
    p.add_argument("graph")
    p.set_defaults(func=cmd_frag)

    p = sub.add_parser("gen", help="seeded G(n, p) graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--out", default=None, help="output file (count 1) or directory")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="oracle-equivalence check over a corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--threads", type=int, default=None, help=f"worker processes (default ${THREADS_ENV} or 1)")
    p.add_argument("--write-golden", action="store_true", help="(re)write golden.json from the oracle")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        body, code = args.func(args)
    except (UsageError, GraphInputError, ParseError, CapacityError, FileNotFoundError) as exc:
        print(f"localwl {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"localwl {args.command}: internal invariant violated: {exc}", file=sys.stderr)
        return 2
    if args.command == "gen" and not body:
        return code
    params = {k: v for k, v in vars(args).items() if k not in ("func", "command", "timing")}
    report = {"command": args.command, "params": params, **body}
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 6)
    sys.stdout.write(dumps_report(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
