#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the two hot loops (dense convolution and row axpy) on
representative workloads, then an end-to-end grid verification in a
subprocess per backend.  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

import os
import random
import subprocess
import sys
import time
from fractions import Fraction

from qrules import _pykernels

try:
    from qrules import _ckernels
except ImportError:
    _ckernels = None


def timeit(fn, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_row(name, make_args, call):
    args = make_args()
    py = timeit(lambda: call(_pykernels, *args))
    if _ckernels is None:
        print(
            f"{name:34s} python {py * 1e3:8.2f} ms   (compiled kernels not built)",
            flush=True,
        )
        return
    c = timeit(lambda: call(_ckernels, *args))
    print(
        f"{name:34s} python {py * 1e3:8.2f} ms   c {c * 1e3:8.2f} ms   "
        f"speedup {py / c:5.1f}x",
        flush=True,
    )


def main():
    rng = random.Random(987)
    n = 600

    ints = [rng.randint(-99, 99) for _ in range(n)]
    fracs = [Fraction(rng.randint(-99, 99), rng.randint(1, 9)) for _ in range(n)]
    residues = [rng.randrange(10007) for _ in range(n)]

    print("== kernel microbenchmarks ==")
    bench_row(
        f"conv_obj int[{n}] x int[{n}]",
        lambda: (list(ints), list(ints), 0),
        lambda mod, a, b, z: mod.conv_obj(a, b, z),
    )
    bench_row(
        f"conv_obj Fraction[{n // 3}]^2",
        lambda: (fracs[: n // 3], fracs[: n // 3], Fraction(0)),
        lambda mod, a, b, z: mod.conv_obj(a, b, z),
    )
    bench_row(
        f"conv_mod p=10007 [{n}]^2",
        lambda: (list(residues), list(residues), 10007),
        lambda mod, a, b, p: mod.conv_mod(a, b, p),
    )
    bench_row(
        f"axpy_obj int[{n}] x3000",
        lambda: (list(ints), list(ints), 7),
        lambda mod, y, x, c: [mod.axpy_obj(y, x, c) for _ in range(3000)],
    )
    bench_row(
        f"axpy_mod p=10007 [{n}] x3000",
        lambda: (list(residues), list(residues), 7, 10007),
        lambda mod, y, x, c, p: [mod.axpy_mod(y, x, c, p) for _ in range(3000)],
    )

    print(flush=True)
    print(
        "== end-to-end: mult verify of [n]_q at 24x24 over Fp:10007 ==",
        flush=True,
    )
    code = (
        "import time, qrules\n"
        "ctx = qrules.GF(10007)\n"
        "t = time.perf_counter()\n"
        "gen = lambda n: qrules.quantum_integer(n, ctx)\n"
        "assert qrules.mult_verify(gen, 24, 24).verified\n"
        "print(f'{qrules.kernel_backend:7s} {time.perf_counter() - t:.3f} s')\n"
    )
    for env_extra in ({}, {"QRULES_PURE_PYTHON": "1"}):
        env = dict(os.environ, **env_extra)
        subprocess.run([sys.executable, "-c", code], env=env, check=True)


if __name__ == "__main__":
    main()
