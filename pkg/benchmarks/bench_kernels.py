#!/usr/bin/env python3
"""Compare the two kernel backends on identical, seeded workloads.

The backend binds once when ``levelplan._kernels`` imports, so each
measurement runs in a fresh interpreter: this script re-invokes itself
with ``--measure BACKEND`` and ``LEVELPLAN_BACKEND`` set, collects one
JSON line per child, checks that both backends produced identical
results, and prints the timing table.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

SEARCH_INSTANCES = 60
COUNT_DRAWINGS = 300


def _search_workload():
    from levelplan import GeneratorConfig, instance_for_iteration

    config = GeneratorConfig(levels=(3, 5), width=(2, 6), edge_probability=0.45, seed=7)
    return [instance_for_iteration(config, i) for i in range(SEARCH_INSTANCES)]


def _count_workload():
    import random

    from levelplan import Drawing, GeneratorConfig, instance_for_iteration

    config = GeneratorConfig(levels=(2, 3), width=(10, 14), edge_probability=0.4, seed=11)
    rng = random.Random(2026)
    pairs = []
    for i in range(COUNT_DRAWINGS):
        graph = instance_for_iteration(config, i)
        orders = {}
        for lvl in graph.levels():
            seq = list(graph.vertices_on(lvl))
            rng.shuffle(seq)
            orders[lvl] = tuple(seq)
        pairs.append((graph, Drawing(orders)))
    return pairs


def _run_search(instances):
    from levelplan import brute_force_test

    checksum = 0
    for graph in instances:
        verdict = brute_force_test(graph)
        checksum += verdict.extensions * (2 if verdict.planar else 3)
    return checksum


def _run_count(pairs):
    from levelplan import count_crossings

    return sum(count_crossings(graph, drawing) for graph, drawing in pairs)


def measure(repeat: int) -> dict:
    from levelplan._kernels import BACKEND

    instances = _search_workload()
    pairs = _count_workload()
    result = {"backend": BACKEND}
    for name, fn, arg in (
        ("search", _run_search, instances),
        ("count", _run_count, pairs),
    ):
        checksum = fn(arg)  # warm-up: numba compiles here, results checked here
        best = min(_timed(fn, arg, checksum) for _ in range(repeat))
        result[f"{name}_s"] = best
        result[f"{name}_checksum"] = checksum
    return result


def _timed(fn, arg, expected) -> float:
    start = time.perf_counter()
    got = fn(arg)
    elapsed = time.perf_counter() - start
    if got != expected:
        raise AssertionError(f"nondeterministic workload: {got} != {expected}")
    return elapsed


def _child(backend: str, repeat: int) -> dict:
    env = dict(os.environ, LEVELPLAN_BACKEND=backend)
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--measure", backend,
         "--repeat", str(repeat)],
        capture_output=True, text=True, env=env,
    )
    if proc.returncode != 0:
        raise RuntimeError(f"{backend} child failed:\n{proc.stderr}")
    return json.loads(proc.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=1,
                        help="timed passes per workload; best one counts")
    parser.add_argument("--measure", metavar="BACKEND",
                        help=argparse.SUPPRESS)  # internal child mode
    args = parser.parse_args(argv)

    if args.measure:
        print(json.dumps(measure(args.repeat)))
        return 0

    results = {backend: _child(backend, args.repeat) for backend in ("numba", "python")}
    for key in ("search_checksum", "count_checksum"):
        values = {r[key] for r in results.values()}
        if len(values) != 1:
            raise AssertionError(f"backends disagree on {key}: {values}")

    print(f"workloads: {SEARCH_INSTANCES} oracle searches (levels 3-5, widths 2-6), "
          f"{COUNT_DRAWINGS} crossing counts (widths 10-14)")
    print(f"{'workload':<18}{'numba':>12}{'python':>12}{'speedup':>10}")
    for name, label in (("search", "oracle search"), ("count", "crossing count")):
        numba_s = results["numba"][f"{name}_s"]
        python_s = results["python"][f"{name}_s"]
        print(f"{label:<18}{numba_s:>11.4f}s{python_s:>11.4f}s"
              f"{python_s / numba_s:>9.1f}x")
    print("both backends returned identical verdicts, extension counts and totals")
    return 0


if __name__ == "__main__":
    sys.exit(main())
