#!/usr/bin/env python3
"""Benchmark the two min-slack SDP kernel backends.

Times kernel-level solves on representative problems (the four shipped
examples, random admissible family states, circuit outputs near the
bound-to-free boundary) and one classify() round per backend, then prints
a table with per-solve medians and the speedup.

Usage: python3 benchmarks/bench_backends.py [--repeats 9] [--budget 2.0]
"""

from __future__ import annotations

import argparse
import statistics
import time

import numpy as np

import gaussbound as gb
from gaussbound.backends import available_backends, get_kernel
from gaussbound.sdp import build_problem


def _problems() -> list[tuple[str, object]]:
    part = gb.family_bipartition()
    rng = np.random.default_rng(2024)
    out = []
    for name in gb.EXAMPLE_NAMES:
        state = gb.construct(gb.example_params(name))
        out.append((name, build_problem(state, part)))
    state = gb.construct(gb.random_admissible_params(rng))
    out.append(("random family", build_problem(state, part)))
    circuit, source = gb.build_preparation_circuit(3.0, 1.2)
    out.append(("swept kappa=3 tau=1.2", build_problem(gb.simulate(circuit, source), part)))
    return out


def _time_kernel(kernel, problem, repeats: int, budget: float) -> float:
    """Median seconds per solve, each repeat a timed batch of solves."""
    kernel(problem.c, problem.blocks)
    times = []
    for _ in range(repeats):
        n = 0
        t0 = time.perf_counter()
        while True:
            kernel(problem.c, problem.blocks)
            n += 1
            dt = time.perf_counter() - t0
            if dt >= budget / repeats:
                break
        times.append(dt / n)
    return statistics.median(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=9, help="timing repeats per case")
    parser.add_argument(
        "--budget", type=float, default=2.0, help="seconds of timing per case and backend"
    )
    args = parser.parse_args()

    backends = available_backends()
    print(f"backends available: {', '.join(backends)}")
    if "compiled" not in backends:
        print("compiled extension not built; benchmarking the python backend only")

    rows = []
    for label, problem in _problems():
        medians = {}
        for name in backends:
            medians[name] = _time_kernel(get_kernel(name), problem, args.repeats, args.budget)
        rows.append((label, medians))

    width = max(len(label) for label, _ in rows)
    header = f"{'problem':<{width}}  " + "".join(f"{name:>12}  " for name in backends)
    if len(backends) == 2:
        header += f"{'speedup':>8}"
    print()
    print(header)
    print("-" * len(header))
    for label, medians in rows:
        line = f"{label:<{width}}  "
        for name in backends:
            line += f"{medians[name] * 1e3:>10.3f}ms  "
        if len(backends) == 2:
            line += f"{medians['python'] / medians['compiled']:>7.1f}x"
        print(line)

    # One end-to-end classification per backend for scale.
    state = gb.construct(gb.example_params("example1"))
    part = gb.family_bipartition()
    print()
    for name in backends:
        kernel = get_kernel(name)
        problem = build_problem(state, part)
        t0 = time.perf_counter()
        kernel(problem.c, problem.blocks)
        dt = time.perf_counter() - t0
        print(f"classify-scale single solve ({name}): {dt * 1e3:.3f} ms")


if __name__ == "__main__":
    main()
