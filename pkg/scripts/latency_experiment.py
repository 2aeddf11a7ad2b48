#!/usr/bin/env python3
"""Measure successor latency: branch-free integer core vs in-place string scan.

The integer version does the same five statements no matter the size; the
string version walks to the rewrite point and back, so its cost tracks the
word length. Inputs use the worst-case shape (rewrite point at the front)
to make that visible. Reports best-of-R mean ns/call for each size.
"""

import argparse
import math
import time

from dyckgen.bits import next_unchecked
from dyckgen.strings import next_in_place


def worst_case_window(n: int) -> str:
    return "10" + "1" * (n - 1) + "0" * (n - 1)


def bit_latency_ns(n: int, repeats: int, calls: int) -> float:
    value = int(worst_case_window(n), 2)
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter_ns()
        for _ in range(calls):
            next_unchecked(value)
        best = min(best, (time.perf_counter_ns() - start) / calls)
    return best


def string_latency_ns(n: int, repeats: int, calls: int) -> float:
    template = list(worst_case_window(n))
    best = math.inf
    for _ in range(repeats):
        buffers = [template[:] for _ in range(calls)]
        start = time.perf_counter_ns()
        for buffer in buffers:
            next_in_place(buffer)
        best = min(best, (time.perf_counter_ns() - start) / calls)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sizes", type=int, nargs="+", default=[8, 16, 24, 31], help="half-lengths"
    )
    parser.add_argument("--repeats", type=int, default=9)
    parser.add_argument("--calls", type=int, default=20_000)
    args = parser.parse_args()

    print(f"{'n':>4} {'bit ns/call':>14} {'string ns/call':>16}")
    bit_results = {}
    string_results = {}
    for n in args.sizes:
        bit_results[n] = bit_latency_ns(n, args.repeats, args.calls)
        string_results[n] = string_latency_ns(n, args.repeats, max(args.calls // 4, 1))
        print(f"{n:>4} {bit_results[n]:>14.1f} {string_results[n]:>16.1f}")

    lo, hi = min(args.sizes), max(args.sizes)
    print(f"\nbit spread across sizes:  {max(bit_results.values()) / min(bit_results.values()):.2f}x")
    print(f"string growth {lo} -> {hi}:   {string_results[hi] / string_results[lo]:.2f}x")


if __name__ == "__main__":
    main()
