"""``kcut`` command line: solve, exact, gen, verify and bench.

Results go to stdout as one JSON object with a fixed key order; a short
human-readable summary goes to stderr. Exit codes: 2 bad input, 3 instance
above a size guardrail, 4 infeasible k, 5 a lemma check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

import numpy as np

from .errors import CapacityError, GraphError, InfeasibleError
from .generators import FAMILIES, GenSpec, SplitMix64, generate
from .graph import Graph, components, make_split, remove_split
from .greedy import GreedyConfig, greedy_kcut, h_of_epsilon
from .io import parse_graph, render_graph
from .lemmas import DEFAULT_FAMILY, CORPUS_FAMILIES, SUITES, read_reports, run_suite, summarize, write_reports
from .splits import min_kway_split

EXIT_PARSE, EXIT_CAPACITY, EXIT_INFEASIBLE, EXIT_LEMMA = 2, 3, 4, 5


def _rational(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/3, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _read_input(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _verify_result(g: Graph, split, k: int, comps: list[list[int]]) -> None:
    """Recompute the cut from scratch before it is reported."""
    rest = remove_split(g, split)
    if components(rest) != comps or len(comps) != k:
        raise AssertionError("reported components do not match the cut")
    if sum(g.edge(i).weight for i in split.edge_ids) != split.weight:
        raise AssertionError("reported weight does not match the cut edges")
    if make_split(g, split.edge_ids).separation_degree != k:
        raise AssertionError("cut does not have the requested separation degree")


def _run_result(args, g: Graph, split, algorithm: str, h, epsilon, trace, started: float) -> dict:
    comps = components(remove_split(g, split))
    _verify_result(g, split, args.k, comps)
    result = {
        "instance_path": args.input,
        "k": args.k,
        "algorithm": algorithm,
        "h": h,
        "epsilon": None if epsilon is None else _rat_str(epsilon),
        "cut_edge_list": [[g.edge(i).u, g.edge(i).v, g.edge(i).weight] for i in split.sorted_ids()],
        "total_weight": split.weight,
        "components": comps,
    }
    if getattr(args, "with_opt", False):
        opt = min_kway_split(g, args.k).weight
        result["opt_weight"] = opt
        ratio = Fraction(split.weight, opt) if opt else Fraction(1)
        result["ratio"] = float(ratio)
        result["ratio_exact"] = _rat_str(ratio)
    if trace is not None:
        result["trace"] = [
            {"phase": s.phase, "separation_degree": s.split.separation_degree,
             "weight": s.split.weight, "density": _rat_str(s.density),
             "components_after": s.components_after}
            for s in trace.steps]
    result["wall_time_ms"] = round((time.perf_counter() - started) * 1000, 3)
    return result


def cmd_solve(args) -> int:
    started = time.perf_counter()
    g = _read_input(args.input)
    h = args.h
    if h is None:
        h = 3 if args.epsilon is None else h_of_epsilon(args.epsilon, args.c2)
    cfg = GreedyConfig(k=args.k, h=h, epsilon=args.epsilon, c2=args.c2)
    split, trace = greedy_kcut(g, cfg)
    result = _run_result(args, g, split, "greedy", h, args.epsilon, trace, started)
    _emit(result)
    summary = f"greedy k={args.k} h={h}: weight {split.weight} in {len(trace.steps)} steps"
    if "ratio" in result:
        summary += f", OPT {result['opt_weight']}, ratio {result['ratio_exact']}"
    _say(summary)
    return 0


def cmd_exact(args) -> int:
    started = time.perf_counter()
    g = _read_input(args.input)
    split = min_kway_split(g, args.k)
    _emit(_run_result(args, g, split, "exact", None, None, None, started))
    _say(f"exact k={args.k}: weight {split.weight}")
    return 0


def _parse_size(family: str, text: str):
    if family == "grid":
        rows, _, cols = text.partition("x")
        try:
            return int(rows), int(cols)
        except ValueError:
            raise GraphError(f"grid size must look like 3x4, got {text!r}") from None
    try:
        return int(text)
    except ValueError:
        raise GraphError(f"size must be an integer, got {text!r}") from None


def cmd_gen(args) -> int:
    size = _parse_size(args.family, args.size)
    graphs = [generate(GenSpec(args.family, size, args.weights, args.lo, args.hi, seed=args.seed + i))
              for i in range(args.count)]
    if args.out is None:
        if args.count != 1:
            raise GraphError("--count above 1 needs --out DIR")
        sys.stdout.write(render_graph(graphs[0]))
        return 0
    out = Path(args.out)
    if args.count == 1 and out.suffix:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(render_graph(graphs[0]))
        _say(f"wrote {out}")
        return 0
    out.mkdir(parents=True, exist_ok=True)
    for i, g in enumerate(graphs):
        (out / f"{args.family}_{args.seed + i:06d}.txt").write_text(render_graph(g))
    _say(f"wrote {len(graphs)} instances to {out}")
    return 0


def cmd_verify(args) -> int:
    if args.reports is not None:
        reports = read_reports(args.reports)
    else:
        suites = list(SUITES) if args.suite == "all" else [args.suite]
        reports = []
        for suite in suites:
            family = args.family or DEFAULT_FAMILY[suite]
            reports.extend(run_suite(suite, family, args.count, args.seed, args.jobs))
        if args.out:
            write_reports(reports, args.out)
    summary = summarize(reports)
    failures = sum(s.failures for s in summary)
    _emit({
        "lemmas": {s.lemma_id: {"total": s.total, "vacuous": s.vacuous,
                                "nonvacuous": s.nonvacuous, "failures": s.failures,
                                "nonvacuous_rate": float(s.nonvacuous_rate)} for s in summary},
        "failures": failures,
    })
    for s in summary:
        _say(f"{s.lemma_id}: {s.total - s.failures}/{s.total} pass "
             f"({s.vacuous} vacuous, {s.failures} failed)")
    return EXIT_LEMMA if failures else 0


BENCH_COLUMNS = ("instance", "seed", "n", "m", "k", "h", "greedy_weight", "opt_weight",
                 "ratio", "ratio_exact")


def _bench_instance(task) -> list[dict]:
    index, seed, n, ks, h = task
    g = generate(GenSpec("random_planar", n, "uniform", 1, 10, seed=seed))
    rows = []
    for k in ks:
        if k > n:
            continue
        split, _ = greedy_kcut(g, GreedyConfig(k=k, h=h))
        opt = min_kway_split(g, k).weight
        ratio = Fraction(split.weight, opt) if opt else Fraction(1)
        rows.append({"instance": index, "seed": seed, "n": n, "m": g.edge_count, "k": k, "h": h,
                     "greedy_weight": split.weight, "opt_weight": opt,
                     "ratio": f"{float(ratio):.6f}", "ratio_exact": _rat_str(ratio)})
    return rows


def bench_rows(count: int, seed: int, n_min: int, n_max: int, ks, h: int = 3, jobs: int = 1) -> list[dict]:
    """Greedy vs exact over seeded random planar instances, one row per (instance, k)."""
    rng = SplitMix64(seed)
    tasks = []
    for i in range(count):
        n = rng.integer(n_min, n_max)
        tasks.append((i, rng.next_u64(), n, tuple(ks), h))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_bench_instance, tasks))
    else:
        batches = [_bench_instance(t) for t in tasks]
    return [row for batch in batches for row in batch]


def bench_summary(rows: list[dict]) -> dict:
    ratios = np.array([float(Fraction(r["ratio_exact"])) for r in rows])
    if not len(ratios):
        return {"rows": 0}
    worst = max(rows, key=lambda r: Fraction(r["ratio_exact"]))
    return {
        "rows": len(rows),
        "mean": float(ratios.mean()),
        "max": float(ratios.max()),
        "max_exact": worst["ratio_exact"],
        "p50": float(np.percentile(ratios, 50)),
        "p90": float(np.percentile(ratios, 90)),
        "p99": float(np.percentile(ratios, 99)),
        "optimal_fraction": float((ratios == 1).mean()),
    }


def cmd_bench(args) -> int:
    ks = args.k or [2, 3, 4, 5, 6]
    rows = bench_rows(args.count, args.seed, args.n_min, args.n_max, ks, args.h or 3, args.jobs)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    summary = bench_summary(rows)
    if args.out:
        Path(args.out).write_text(buf.getvalue())
        _emit(summary)
    else:
        sys.stdout.write(buf.getvalue())
    _say(" ".join(f"{key}={value}" for key, value in summary.items()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcut", description="Greedy and exact minimum k-cut.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="greedy k-cut of an edge-list file")
    solve.add_argument("--input", required=True, help="edge-list file, or - for stdin")
    solve.add_argument("--k", type=int, required=True)
    solve.add_argument("--h", type=int, default=None,
                       help="phase-1 degree bound (default 3, or h(epsilon) with --epsilon)")
    solve.add_argument("--epsilon", type=_rational, default=None, help="rational such as 1/2")
    solve.add_argument("--c2", type=_rational, default=Fraction(1))
    solve.add_argument("--with-opt", action="store_true", help="also compute OPT and the ratio")
    solve.set_defaults(func=cmd_solve)

    exact = sub.add_parser("exact", help="exact minimum k-way split")
    exact.add_argument("--input", required=True)
    exact.add_argument("--k", type=int, required=True)
    exact.set_defaults(func=cmd_exact)

    gen = sub.add_parser("gen", help="write generated instances")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--size", required=True, help="vertex count, or RxC for grid")
    gen.add_argument("--weights", choices=("unit", "uniform"), default="unit")
    gen.add_argument("--lo", type=int, default=1)
    gen.add_argument("--hi", type=int, default=10)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--count", type=int, default=1)
    gen.add_argument("--out", default=None, help="file (count 1) or directory")
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser("verify", help="run lemma checks over a seeded corpus")
    verify.add_argument("--suite", choices=tuple(SUITES) + ("all",), default="all")
    verify.add_argument("--family", choices=CORPUS_FAMILIES, default=None,
                        help="corpus family (default depends on the suite)")
    verify.add_argument("--count", type=int, default=50)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--out", default=None, help="write JSONL reports here")
    verify.add_argument("--reports", default=None, help="summarize an existing JSONL report file")
    verify.set_defaults(func=cmd_verify)

    bench = sub.add_parser("bench", help="greedy/OPT ratio table as CSV")
    bench.add_argument("--count", type=int, default=50)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--k", type=int, nargs="+", default=None)
    bench.add_argument("--h", type=int, default=None)
    bench.add_argument("--n-min", type=int, default=6)
    bench.add_argument("--n-max", type=int, default=12)
    bench.add_argument("--jobs", type=int, default=1)
    bench.add_argument("--out", default=None, help="CSV path (summary then goes to stdout)")
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        _say(f"error: {exc}")
        return EXIT_CAPACITY
    except InfeasibleError as exc:
        _say(f"error: {exc}")
        return EXIT_INFEASIBLE
    except (GraphError, OSError) as exc:
        _say(f"error: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
