"""
Benchmark script: writhe polynomial, fuzzing and realization timings.
"""
import time

import numpy as np

from vknot.diagram import random_diagram
from vknot.graph import build_intersection_graph
from vknot.invariants import LaurentPolynomial, graph_writhe_polynomial, writhe_polynomial
from vknot.moves import fuzz_invariance
from vknot.realize import realize


def benchmark_writhe(n, num_trials=20):
    """Time the diagram and graph writhe polynomials on random diagrams."""
    times = {'diagram': [], 'graph': []}
    for seed in range(num_trials):
        d = random_diagram(n, seed)

        start = time.time()
        w = writhe_polynomial(d)
        times['diagram'].append(time.time() - start)

        start = time.time()
        wg = graph_writhe_polynomial(build_intersection_graph(d))
        times['graph'].append(time.time() - start)
        assert w == wg
    return {k: np.mean(v) for k, v in times.items()}


def benchmark_fuzz(n, moves=50, num_trials=3):
    """Time fuzz runs and count failures."""
    elapsed = []
    failures = 0
    for seed in range(num_trials):
        start = time.time()
        report = fuzz_invariance(n, moves, seed)
        elapsed.append(time.time() - start)
        failures += len(report.failures)
    return np.mean(elapsed), failures


def benchmark_realize(k, num_trials=3):
    """Time the realization of t^k - k*t - t^-k + k*t^-1."""
    f = LaurentPolynomial({k: 1, 1: -k, -k: -1, -1: k})
    elapsed = []
    for _ in range(num_trials):
        start = time.time()
        d = realize(f)
        elapsed.append(time.time() - start)
    return np.mean(elapsed), d.n


def main():
    print("=" * 80)
    print("Virtual Knot Toolkit Benchmark")
    print("=" * 80)

    print("\n" + "=" * 80)
    print("WRITHE POLYNOMIAL")
    print("=" * 80)
    print(f"\n{'n':<5} {'Diagram(s)':<14} {'Graph(s)':<14}")
    print("-" * 80)
    for n in [4, 8, 12, 24]:
        results = benchmark_writhe(n)
        print(f"{n:<5} {results['diagram']:<14.6f} {results['graph']:<14.6f}")

    print("\n" + "=" * 80)
    print("FUZZING (50 moves)")
    print("=" * 80)
    print(f"\n{'n':<5} {'Run(s)':<14} {'Failures':<10}")
    print("-" * 80)
    for n in [2, 4, 6, 8]:
        print(f"Running fuzz for n={n}...", end=" ", flush=True)
        elapsed, failures = benchmark_fuzz(n)
        print("Done!")
        print(f"{n:<5} {elapsed:<14.6f} {failures:<10}")

    print("\n" + "=" * 80)
    print("REALIZATION")
    print("=" * 80)
    print(f"\n{'k':<5} {'Realize(s)':<14} {'Chords':<10}")
    print("-" * 80)
    for k in [2, 5, 10, 20]:
        elapsed, chords = benchmark_realize(k)
        print(f"{k:<5} {elapsed:<14.6f} {chords:<10}")

    print("\n" + "=" * 80)
    print("\nNotes:")
    print("  - Writhe times are averaged over 20 random diagrams")
    print("  - Fuzz runs apply one diagram move and one omega move per step")
    print("=" * 80)


if __name__ == "__main__":
    main()
