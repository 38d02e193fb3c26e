#!/usr/bin/env python3
"""Compare the compiled and pure-Python matrix kernels on the workloads that
dominate the verification suite: exact rational elimination, composition of
sparse structure matrices, Kronecker products, and a full exhaustive sweep
(every 2-dimensional F2 algebra table, verified as an internal category).

Usage:  python benchmarks/bench_kernel.py [--repeat N]
"""

import argparse
import itertools
import random
import time
from fractions import Fraction

from icat import _kernel_py

try:
    from icat import _kernel_c

    KERNELS = [("c", _kernel_c), ("python", _kernel_py)]
except ImportError:
    KERNELS = [("python", _kernel_py)]


def random_rational_matrix(rng, m, n, dens=6):
    return [[Fraction(rng.randint(-9, 9), rng.randint(1, dens)) for _ in range(n)]
            for _ in range(m)]


def sprinkle_zeros(rows, rng, density=0.4):
    return [[x if rng.random() < density else Fraction(0) for x in row] for row in rows]


def bench_matmul(kernel, rng, repeat):
    a = random_rational_matrix(rng, 40, 40)
    b = random_rational_matrix(rng, 40, 40)
    start = time.perf_counter()
    for _ in range(repeat):
        kernel.mat_mul(a, b, 40, 40, 40, Fraction(0))
    return time.perf_counter() - start


def bench_sparse_matmul(kernel, rng, repeat):
    a = sprinkle_zeros(random_rational_matrix(rng, 64, 64), rng, 0.15)
    b = sprinkle_zeros(random_rational_matrix(rng, 64, 64), rng, 0.15)
    start = time.perf_counter()
    for _ in range(repeat):
        kernel.mat_mul(a, b, 64, 64, 64, Fraction(0))
    return time.perf_counter() - start


def bench_rref(kernel, rng, repeat):
    base = random_rational_matrix(rng, 48, 64)
    start = time.perf_counter()
    for _ in range(repeat):
        rows = [list(r) for r in base]
        kernel.rref(rows, 48, 64)
    return time.perf_counter() - start


def bench_kron(kernel, rng, repeat):
    a = random_rational_matrix(rng, 12, 12)
    b = random_rational_matrix(rng, 6, 6)
    start = time.perf_counter()
    for _ in range(repeat):
        kernel.mat_kron(a, b, 12, 12, 6, 6, Fraction(0))
    return time.perf_counter() - start


MICRO = [
    ("dense 40x40 matmul", bench_matmul),
    ("sparse 64x64 matmul", bench_sparse_matmul),
    ("48x64 rref", bench_rref),
    ("12x12 (x) 6x6 kron", bench_kron),
]


def bench_algebra_sweep():
    """End-to-end: verify every 2-dim algebra table over F2 as an internal
    category over the unit comonoid, using whichever kernel is selected by
    the ICAT_PURE_PYTHON environment variable at interpreter start."""
    from icat.bicomod import Bicomodule, Comonoid
    from icat.fields import GF
    from icat.intcat import InternalCategory, verify_internal_category
    from icat.matrix import Matrix, kernel_backend

    field = GF(2)
    comon = Comonoid(Matrix.identity(field, 1), Matrix.identity(field, 1))
    lam = Matrix.identity(field, 2)
    bicomod = Bicomodule(comon, comon, lam, lam)
    start = time.perf_counter()
    passing = 0
    for flat in itertools.product([0, 1], repeat=8):
        mult = Matrix.from_int_rows(field, [list(flat[:4]), list(flat[4:])])
        for unit_bits in itertools.product([0, 1], repeat=2):
            unit = Matrix.from_int_rows(field, [[unit_bits[0]], [unit_bits[1]]])
            ic = InternalCategory(comon, bicomod, mult, unit)
            passing += verify_internal_category(ic).ok
    elapsed = time.perf_counter() - start
    return kernel_backend(), elapsed, passing


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()

    print(f"{'workload':28s}" + "".join(f"{name:>12s}" for name, _ in KERNELS) + "   speedup")
    for label, bench in MICRO:
        times = []
        for _, kernel in KERNELS:
            rng = random.Random(20091014)
            times.append(bench(kernel, rng, args.repeat))
        speed = f"{times[-1] / times[0]:.2f}x" if len(times) == 2 else "-"
        print(f"{label:28s}" + "".join(f"{t:12.4f}" for t in times) + f"   {speed}")

    backend, elapsed, passing = bench_algebra_sweep()
    print(f"\nalgebra sweep (1024 tables, backend={backend}): "
          f"{elapsed:.3f}s, {passing} lawful")
    if backend == "c":
        print("re-run with ICAT_PURE_PYTHON=1 to time the sweep on the fallback kernel")


if __name__ == "__main__":
    main()
