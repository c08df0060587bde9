"""Command line front end.

Exit codes: 0 success, 1 a verification failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from pathlib import Path
from typing import Sequence

from .graph import GraphFormatError, read_graph, read_ordering, save_graph, save_ordering
from .generators import PosetSpec, gen_fixture, gen_layered_cocomp, gen_random_cocomp
from .layers import build_partition_classes
from .oracle import lexdfs_plus_oracle
from .refine import SegmentView, run_pipeline
from .verify import check_4pc, check_flipping, check_partition, check_umbrella_free

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

BENCH_COLUMNS = (
    "n", "m", "mode", "ns", "label_touches", "bin_moves", "pivot_pushes", "refine_moves", "seed",
)
CHECKS = ("umbrella", "4pc", "flip", "partition")


class UsageError(Exception):
    pass


def format_layout(layout: Sequence[SegmentView]) -> str:
    return "(" + "".join("(" + ", ".join(map(str, s.members)) + ")" for s in layout) + ")"


def trace_lines(run) -> list[str]:
    lines = ["# partition: index label members"]
    lines += run.partition.trace_lines()
    lines.append("# refinement: refine index pivot layout / tau index members")
    for step in run.steps or ():
        for pivot, layout in zip(step.pivots, step.layouts):
            lines.append(f"refine {step.index + 1} {pivot} {format_layout(layout)}")
        lines.append(f"tau {step.index + 1} " + " ".join(map(str, step.result)))
    return lines


def cmd_gen(args) -> int:
    if args.fixture:
        graph, sigma = gen_fixture(args.fixture)
    else:
        if args.n is None:
            raise UsageError("gen needs --n (or --fixture)")
        try:
            if args.width:
                graph, sigma = gen_layered_cocomp(args.n, args.width, args.p, args.seed)
            else:
                graph, sigma = gen_random_cocomp(PosetSpec(args.n, args.p, args.seed))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    save_graph(graph, args.out_graph)
    save_ordering(sigma, args.out_sigma)
    print(f"{graph.n} {graph.m}")
    return EXIT_OK


def cmd_run(args) -> int:
    graph = read_graph(args.graph)
    sigma = read_ordering(args.sigma, graph.n)
    trace = args.trace or os.environ.get("COCOMP_TRACE") == "1"
    run = run_pipeline(graph, sigma, plus=args.plus, trace=trace)
    if trace:
        print("\n".join(trace_lines(run)))
    if args.out:
        save_ordering(run.tau, args.out)
    else:
        print(" ".join(map(str, run.tau)))
    return EXIT_OK


def cmd_verify(args) -> int:
    graph = read_graph(args.graph)
    order = read_ordering(args.ordering, graph.n)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    sigma = read_ordering(args.sigma, graph.n) if args.sigma else None
    if sigma is None and (set(checks) & {"flip", "partition"} or args.against_oracle):
        raise UsageError("--sigma is required for flip, partition and oracle comparison")

    failed = False
    for name in checks:
        if name == "umbrella":
            result = check_umbrella_free(graph, order)
        elif name == "4pc":
            result = check_4pc(graph, order)
        elif name == "flip":
            result = check_flipping(graph, sigma, order)
        else:
            result = check_partition(graph, sigma, build_partition_classes(graph, sigma))
        if result is None:
            print(f"{name}: ok")
        else:
            print(f"{name}: {result.render()}")
            failed = True
    if args.against_oracle:
        expected = lexdfs_plus_oracle(graph, sigma)
        if expected.seq == order.seq:
            print("oracle: ok")
        else:
            print("oracle: mismatch " + " ".join(map(str, expected)))
            failed = True
    return EXIT_FAIL if failed else EXIT_OK


def bench_rows(sizes, p, seeds, mode, width=0, base_seed=0):
    """Yield one record per (size, seed). ``width`` > 0 selects the layered generator."""
    for n in sizes:
        for s in range(seeds):
            seed = base_seed + s
            if width:
                graph, sigma = gen_layered_cocomp(n, width, p, seed)
            else:
                graph, sigma = gen_random_cocomp(PosetSpec(n, p, seed))
            t0 = time.perf_counter_ns()
            run = run_pipeline(graph, sigma, plus=(mode == "plus"))
            elapsed = time.perf_counter_ns() - t0
            c = run.counters
            yield {
                "n": graph.n, "m": graph.m, "mode": mode, "ns": elapsed,
                "label_touches": c.label_touches, "bin_moves": c.bin_moves,
                "pivot_pushes": c.pivot_pushes, "refine_moves": c.refine_moves, "seed": seed,
            }


def cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {args.sizes!r}") from None
    path = Path(args.csv)
    write_header = not path.exists() or path.stat().st_size == 0
    with open(path, "a", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=BENCH_COLUMNS)
        if write_header:
            writer.writeheader()
        for row in bench_rows(sizes, args.p, args.seeds, args.mode, args.width, args.seed):
            writer.writerow(row)
            fh.flush()
            print(",".join(str(row[k]) for k in BENCH_COLUMNS))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cclexdfs", description="Linear-time LexDFS on cocomparability graphs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a graph and a cocomparability ordering")
    g.add_argument("--fixture", choices=("fig1", "fig2"))
    g.add_argument("--n", type=int)
    g.add_argument("--p", type=float, default=0.5, help="arc probability of the poset DAG")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--width", type=int, default=0, help="use the layered generator")
    g.add_argument("--out-graph", required=True)
    g.add_argument("--out-sigma", required=True)
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("run", help="compute the LexDFS ordering")
    r.add_argument("--graph", required=True)
    r.add_argument("--sigma", required=True)
    r.add_argument("--plus", action="store_true", help="rightmost-in-sigma tie breaking")
    r.add_argument("--out")
    r.add_argument("--trace", action="store_true")
    r.set_defaults(func=cmd_run)

    v = sub.add_parser("verify", help="check ordering properties")
    v.add_argument("--graph", required=True)
    v.add_argument("--ordering", required=True)
    v.add_argument("--checks", default="umbrella,4pc")
    v.add_argument("--sigma")
    v.add_argument("--against-oracle", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="operation counters and timings as CSV")
    b.add_argument("--sizes", required=True)
    b.add_argument("--p", type=float, default=0.5)
    b.add_argument("--seeds", type=int, default=1)
    b.add_argument("--seed", type=int, default=0, help="first seed")
    b.add_argument("--mode", choices=("default", "plus"), default="default")
    b.add_argument("--width", type=int, default=0, help="use the layered generator")
    b.add_argument("--csv", required=True)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
