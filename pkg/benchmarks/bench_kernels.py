#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Times the Pauli-expectation sweep (the per-snapshot cost driver), single
gate application, and a full traced circuit under each backend, and checks
that both return bit-identical results.

Usage: python benchmarks/bench_kernels.py [--qubits 4 6 8] [--repeats 5]
"""

import argparse
import timeit

import numpy as np

from magictrace import _kernels_py

try:
    from magictrace import _kernels
except ImportError:
    _kernels = None


def random_state(n, seed=0):
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return amps / np.linalg.norm(amps)


def best_of(fn, repeats):
    return min(timeit.repeat(fn, number=1, repeat=repeats))


def bench_sweep(backend, n, repeats):
    amps = random_state(n)
    return best_of(lambda: backend.pauli_expectations(amps, n), repeats)


def bench_gate(backend, n, repeats):
    amps = random_state(n)
    u = (0.8, 0.6j, 0.6j, 0.8)

    def run():
        for q in range(1, n + 1):
            backend.apply_unitary_1q(amps, n, q, *u)

    return best_of(run, repeats) / n


def bench_trace(n, repeats):
    """Full metric trace of a diagnostic circuit under the active backend."""
    from magictrace.circuits import TraceOptions, build_qft, run_trace
    from magictrace.geometry import TargetSpace
    from magictrace.harness import qft_output_state
    from magictrace.state import init_basis_state

    bits = "01" * (n // 2) + "1" * (n % 2)
    target = TargetSpace.single_state(qft_output_state(n, bits))
    circuit = build_qft(n)
    initial = init_basis_state(n, bits)
    opts = TraceOptions(permutation_min=n <= 8)
    return best_of(lambda: run_trace(circuit, initial, target, opts), repeats)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--qubits", type=int, nargs="+", default=[4, 6, 8])
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _kernels is None:
        print("compiled kernels unavailable; showing pure-python numbers only")
    backends = [("python", _kernels_py)] + (
        [("compiled", _kernels)] if _kernels else [])

    print(f"{'benchmark':<28}{'n':>3}  " +
          "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for n in args.qubits:
        amps = random_state(n)
        if _kernels is not None:
            same = np.array_equal(_kernels.pauli_expectations(amps, n),
                                  _kernels_py.pauli_expectations(amps, n))
            assert same, "backends disagree"
        for label, fn in (("pauli sweep (all 4^n)", bench_sweep),
                          ("1q gate apply (per gate)", bench_gate)):
            times = [fn(backend, n, args.repeats) for _, backend in backends]
            cells = "".join(f"{t * 1e6:>10.1f}us" for t in times)
            speedup = f"{times[0] / times[-1]:>9.1f}x" if len(times) == 2 else ""
            print(f"{label:<28}{n:>3}  {cells}{speedup}")

    import os

    n_trace = min(max(args.qubits), 7)
    for name in ("python", "compiled") if _kernels else ("python",):
        os.environ["MAGICTRACE_KERNELS"] = name
        # subprocess keeps the backend selection clean per run
        import subprocess
        import sys

        code = (
            "import sys; sys.argv=['x']\n"
            f"from benchmarks.bench_kernels import bench_trace\n"
            f"print(bench_trace({n_trace}, {args.repeats}))"
        )
        out = subprocess.run([sys.executable, "-c", code], capture_output=True,
                             text=True, env=os.environ.copy(), cwd=_repo_root())
        t = float(out.stdout.strip().splitlines()[-1])
        print(f"full traced transform circuit (n={n_trace}, {name}): "
              f"{t * 1e3:.1f} ms")


def _repo_root():
    import pathlib

    return str(pathlib.Path(__file__).resolve().parent.parent)


if __name__ == "__main__":
    main()
