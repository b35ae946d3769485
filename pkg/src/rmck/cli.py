"""``rmck`` command line.

Exit status: 0 success, 1 domain failure (infeasible k, failed verification,
unmatched threshold case), 2 input/format problems.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import asdict
from typing import Optional

from . import graph as G
from .bounds import bounds
from .coloring import (
    ColoringError,
    EdgeColoring,
    baseline_coloring,
    color_classes,
    improve_coloring,
    is_rmc_k,
    perfectly_connected_coloring,
)
from .edgelist import FormatError, format_edgelist, parse_edgelist
from .normalizer import NormalizationError, normalize
from .packing import BudgetExceededError, packing, spanning_tree_packing
from .profiles import InfeasibleProfileError
from .randomlab import (
    Regime,
    ThresholdCaseError,
    check_stp_formula,
    geometric_grid,
    monotone_within,
    run_trial,
    sample_gnp,
    sweep,
    trial_seed,
)
from .solver import greedy_coloring, mc_heuristic, rmc_exact

SCHEMA = 1
DOMAIN_ERRORS = (G.GraphError, ColoringError, NormalizationError, ThresholdCaseError, InfeasibleProfileError,
                 BudgetExceededError)


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- inputs

def _ints(args: list[str], count: int, family: str) -> list[int]:
    if len(args) != count:
        raise UsageError(f"family {family!r} takes {count} integer argument(s)")
    try:
        return [int(a) for a in args]
    except ValueError:
        raise UsageError(f"family {family!r} takes integer arguments") from None


def build_family(family: str, args: list[str]) -> G.Graph:
    if family == "complete":
        return G.gen_complete(*_ints(args, 1, family))
    if family == "cycle":
        return G.gen_cycle(*_ints(args, 1, family))
    if family == "path":
        return G.gen_path(*_ints(args, 1, family))
    if family == "bipartite":
        return G.gen_complete_bipartite(*_ints(args, 2, family))
    if family == "petersen":
        _ints(args, 0, family)
        return G.gen_petersen()
    if family == "gnp":
        if len(args) != 3:
            raise UsageError("family 'gnp' takes n, p, seed")
        return sample_gnp(int(args[0]), float(args[1]), int(args[2]))
    if family == "perfect":
        k, s, size = _ints(args, 3, family)
        return G.gen_perfectly_connected(k, s, [G.gen_complete(size)] * s)
    raise UsageError(f"unknown family {family!r}")


def _perfect_parts(spec: str) -> tuple[int, int, list[G.Graph]]:
    k, s, size = (int(x) for x in spec.split(","))
    return k, s, [G.gen_complete(size)] * s


def load(source: str) -> tuple[G.Graph, Optional[EdgeColoring]]:
    """Path, ``-`` for stdin, or an inline spec such as ``@complete:6``."""
    if source.startswith("@"):
        family, _, rest = source[1:].partition(":")
        return build_family(family, [a for a in rest.split(",") if a]), None
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {source}: {exc.strerror}") from None
    return parse_edgelist(text)


def emit(args, text: str) -> None:
    if getattr(args, "output", None):
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise FormatError(f"cannot write {args.output}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


def emit_json(args, payload: dict) -> None:
    emit(args, json.dumps({"schema": SCHEMA, **payload}, indent=2) + "\n")


def _colored_edges(g: G.Graph, c: EdgeColoring) -> list[list[int]]:
    c = c.canonical()
    return [[u, v, col] for (u, v), col in zip(g.edges, c.colors)]


def _need_coloring(c: Optional[EdgeColoring], source: str) -> EdgeColoring:
    if c is None:
        raise FormatError(f"{source}: expected a colored edge list (third column)")
    return c


# ---------------------------------------------------------------- commands

def cmd_gen(args) -> int:
    fam_args = []
    if args.family in ("complete", "cycle", "path"):
        fam_args = [args.n]
    elif args.family == "bipartite":
        fam_args = [args.a, args.b]
    elif args.family == "gnp":
        if args.seed is None:
            raise UsageError("gnp needs --seed")
        fam_args = [args.n, args.p, args.seed]
    elif args.family == "perfect":
        fam_args = [args.k, args.s, args.part_size]
    if any(a is None for a in fam_args):
        raise UsageError(f"missing parameters for family {args.family!r}")
    g = build_family(args.family, [str(a) for a in fam_args])
    if args.format == "json":
        emit_json(args, {"n": g.n, "m": g.m, "edges": [list(e) for e in g.edges]})
    else:
        emit(args, format_edgelist(g))
    return 0


def cmd_metrics(args) -> int:
    g, _ = load(args.input)
    emit_json(args, G.metrics(g).to_dict())
    return 0


def cmd_tau(args) -> int:
    g, _ = load(args.input)
    emit_json(args, packing(g, budget=args.budget).to_dict())
    return 0


def cmd_pack(args) -> int:
    g, _ = load(args.input)
    out = spanning_tree_packing(g, args.k)
    emit_json(args, {
        "k": args.k,
        "packed": bool(out),
        "trees": None if out.trees is None else [list(t) for t in out.trees],
        "witness_partition": None if out.witness is None else out.witness.as_lists(),
    })
    return 0 if out else 1


def cmd_color(args) -> int:
    g, given = load(args.input)
    if args.method == "baseline":
        c = baseline_coloring(g, args.k)
    elif args.method == "perfect":
        if not args.parts:
            raise UsageError("--method perfect needs --parts k,s,size")
        k, s, parts = _perfect_parts(args.parts)
        if k != args.k:
            raise UsageError("--parts k must equal --k")
        c = perfectly_connected_coloring(g, k, parts)
    elif args.method == "improve":
        c = improve_coloring(g, _need_coloring(given, args.input), args.k)
    elif args.method == "greedy":
        c = mc_heuristic(g) if args.k == 1 else greedy_coloring(g, args.k)
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(args.method)
    if args.format == "json":
        emit_json(args, {"k": args.k, "colors": c.num_colors, "edges": _colored_edges(g, c)})
    else:
        emit(args, format_edgelist(g, c))
    return 0


def cmd_verify(args) -> int:
    g, c = load(args.input)
    c = _need_coloring(c, args.input)
    c.check(g)
    verdict = is_rmc_k(g, c, args.k)
    summary = color_classes(g, c)
    emit_json(args, {
        "rmc_k": verdict.ok,
        "k": args.k,
        "colors": summary.colors_used,
        "waste": summary.waste,
        "failing_pair": None if verdict.failing_pair is None else list(verdict.failing_pair),
    })
    return 0 if verdict else 1


def cmd_normalize(args) -> int:
    g, c = load(args.input)
    trace = normalize(g, _need_coloring(c, args.input), args.k, check=args.check)
    emit_json(args, trace.to_dict())
    return 0


def cmd_solve(args) -> int:
    g, _ = load(args.input)
    report = bounds(g, args.k)
    if not report.feasible:
        rmc_exact(g, args.k)  # raises with the certifying partition
    res = rmc_exact(g, args.k, budget_ms=args.budget_ms, node_limit=args.node_limit)
    if res.report is not None:
        report = res.report
    emit_json(args, {
        "k": args.k,
        "exact": res.exact,
        "lower": res.value if not res.optimal else report.lower.value,
        "uppers": [b.to_dict() for b in report.uppers],
        "predicate": report.predicate,
        "witness_coloring": _colored_edges(g, res.coloring) if res.optimal else None,
        "incumbent_coloring": None if res.optimal else _colored_edges(g, res.coloring),
        "stats": {"nodes": res.nodes, "elapsed_s": round(res.elapsed, 6)},
    })
    return 0


def cmd_bounds(args) -> int:
    g, _ = load(args.input)
    report = bounds(g, args.k)
    emit_json(args, report.to_dict())
    return 0 if report.feasible else 1


def _write_csv(path: str, rows: list[dict]) -> None:
    if not rows:
        return
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    except OSError as exc:
        raise FormatError(f"cannot write {path}: {exc.strerror}") from None


def cmd_experiment(args) -> int:
    if args.seed is None:
        raise UsageError("experiments need an explicit --seed")
    if args.kind == "stp-formula":
        if args.p is None or len(args.p) != 1:
            raise UsageError("stp-formula takes a single --p")
        p = args.p[0]
        frac = check_stp_formula(args.n, p, args.trials, args.seed, workers=args.workers)
        if args.csv:
            rows = [asdict(run_trial(args.n, p, 1, trial_seed(args.seed, t))) for t in range(args.trials)]
            _write_csv(args.csv, rows)
        emit_json(args, {"n": args.n, "p": p, "trials": args.trials, "seed": args.seed, "agreement": frac})
        return 0
    if args.p:
        grid = sorted(args.p)
    else:
        if None in (args.p_min, args.p_max):
            raise UsageError("sweep needs --p values or --p-min/--p-max/--p-steps")
        grid = geometric_grid(args.p_min, args.p_max, args.p_steps)
    regime = Regime(args.regime, args.f) if args.regime else None
    report = sweep(args.n, args.k, grid, args.trials, args.seed, f_value=args.f, regime=regime,
                   workers=args.workers, rule=args.rule)
    if args.csv:
        rows = [{"p": p, "trials": args.trials, "frequency": f} for p, f in zip(report.grid, report.frequencies)]
        _write_csv(args.csv, rows)
    payload = report.to_dict()
    payload["monotone_3se"] = monotone_within(report.frequencies, args.trials)
    emit_json(args, payload)
    return 0


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rmck", description="Rainbow monochromatic k-edge-connection colorings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def cmd(name, help_text, func, needs_input=True, needs_k=False):
        p = sub.add_parser(name, help=help_text, description=help_text)
        if needs_input:
            p.add_argument("input", help="edge-list path, '-' for stdin, or inline '@family:args'")
        if needs_k:
            p.add_argument("--k", type=int, required=True)
        p.add_argument("-o", "--output", help="write here instead of stdout")
        p.set_defaults(func=func)
        return p

    p = cmd("gen", "Generate a graph family as an edge list.", cmd_gen, needs_input=False)
    p.add_argument("--family", required=True,
                   choices=["complete", "cycle", "path", "bipartite", "petersen", "gnp", "perfect"])
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--k", type=int, help="perfect family: trees per part")
    p.add_argument("--s", type=int, help="perfect family: number of parts")
    p.add_argument("--part-size", type=int, help="perfect family: order of each complete part")
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")

    cmd("metrics", "Degrees, diameter, cut vertices, connectivities, triangle-freeness, common-neighbor minimum.",
        cmd_metrics)

    p = cmd("tau", "Strength tau(G) = min e(G/P)/(|P|-1) with its minimizing partition, and the tree-packing "
                   "number, which equals floor(tau).", cmd_tau)
    p.add_argument("--budget", type=int, default=12, help="largest n for exact tau (default 12)")

    cmd("pack", "k edge-disjoint spanning trees, or a partition certifying that none exist.", cmd_pack,
        needs_k=True)

    p = cmd("color", "Build an RMC_k-coloring: baseline uses k spanning trees plus trivial colors "
                     "(m - k(n-2) colors); perfect uses the hub construction (m - k(n-2) + s - 1).",
            cmd_color, needs_k=True)
    p.add_argument("--method", choices=["baseline", "perfect", "improve", "greedy"], default="baseline")
    p.add_argument("--parts", help="perfect method: 'k,s,size' for s copies of K_size")
    p.add_argument("--format", choices=["edgelist", "json"], default="edgelist")

    cmd("verify", "Check that every vertex pair is joined by k monochromatic paths of distinct colors.",
        cmd_verify, needs_k=True)

    p = cmd("normalize", "Merge crossing color classes until k of them span the graph, which shows "
                         "e(G) >= k(n-1).", cmd_normalize, needs_k=True)
    p.add_argument("--check", action="store_true", help="re-verify RMC_k after every merge")

    p = cmd("solve", "Exact rmc_k by branch and bound over tree partitions of the edges; an RMC_k-coloring "
                     "exists iff tau(G) >= k.", cmd_solve, needs_k=True)
    p.add_argument("--budget-ms", type=float, default=None)
    p.add_argument("--node-limit", type=int, default=None)

    cmd("bounds", "Lower bound m - k(n-2), upper bounds via common neighbors, vertex connectivity and "
                  "m - (k-1)(n-2), and exact-class predicates.", cmd_bounds, needs_k=True)

    p = cmd("experiment", "G(n,p) experiments: the packing-number formula min(delta, floor(m/(n-1))) and "
                          "threshold sweeps for the existence of RMC_k-colorings.", cmd_experiment,
            needs_input=False)
    p.add_argument("kind", choices=["stp-formula", "sweep"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--p", type=float, nargs="+")
    p.add_argument("--p-min", type=float)
    p.add_argument("--p-max", type=float)
    p.add_argument("--p-steps", type=int, default=12)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int)
    p.add_argument("--f", type=int, help="sweep the property m - k(n-2) >= F instead of existence")
    p.add_argument("--regime", choices=["sublinear-log", "superlinear-log", "linear-k"])
    p.add_argument("--rule", choices=["min", "max"], default="min",
                   help="how the sublinear threshold combines k/n and log(n)/n")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--csv", help="also write per-trial or per-p rows as CSV")
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, UsageError) as exc:
        print(f"rmck: {exc}", file=sys.stderr)
        return 2
    except DOMAIN_ERRORS as exc:
        print(f"rmck: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
