#!/usr/bin/env python3
"""Compare the compiled digit kernels against the pure-Python fallback.

Times the raw kernel operations on random digit vectors of several sizes,
then an end-to-end decompose + verify of a 10000-digit number under each
backend (forced via PALSUM_BACKEND in a subprocess, since the package binds
its kernels at import).

Usage: python benchmarks/bench_backends.py [--sizes 1000 10000 ...] [--skip-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from palsum import backend

OPS = ("add", "sub", "compare", "is_pal", "digit_sum")

_E2E_SNIPPET = """
import random, time
from palsum import backend
from palsum.digits import DigitString
from palsum.decomposer import decompose, verify
rng = random.Random(20260811)
s = str(rng.randint(1, 9)) + "".join(rng.choice("0123456789") for _ in range(9999))
n = DigitString.from_decimal(s)
t0 = time.perf_counter(); dec = decompose(n); t1 = time.perf_counter()
rep = verify(dec); t2 = time.perf_counter()
assert rep.ok
print(f"{backend.name()} {t1 - t0:.4f} {t2 - t1:.4f}")
"""


def random_vector(rng, size):
    buf = bytearray(rng.randrange(10) for _ in range(size))
    buf[-1] = rng.randrange(1, 10)
    return bytes(buf)


def time_op(fn, args, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(sizes, repeats):
    mods = {name: backend.get(name) for name in backend.available()}
    rng = random.Random(7)
    print(f"{'op':<10} {'size':>8} " + "".join(f"{m:>12}" for m in mods) + "   speedup")
    for size in sizes:
        a = random_vector(rng, size)
        b = random_vector(rng, size // 2 + 1)
        args_by_op = {
            "add": (a, b),
            "sub": (a, b),
            "compare": (a, a),
            "is_pal": (a,),
            "digit_sum": (a,),
        }
        for op in OPS:
            times = {}
            for name, mod in mods.items():
                times[name] = time_op(getattr(mod, op), args_by_op[op], repeats)
            cols = "".join(f"{times[m] * 1e6:>10.1f}us" for m in mods)
            if "c" in times and "py" in times and times["c"] > 0:
                ratio = f"{times['py'] / times['c']:>8.1f}x"
            else:
                ratio = "       -"
            print(f"{op:<10} {size:>8} {cols} {ratio}")


def bench_e2e():
    print("\nend-to-end, 10000-digit input (decompose / verify seconds):")
    for name in backend.available():
        env = dict(os.environ, PALSUM_BACKEND=name)
        out = subprocess.run(
            [sys.executable, "-c", _E2E_SNIPPET],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        used, t_dec, t_ver = out.stdout.split()
        print(f"  {used}: decompose {float(t_dec):.4f}s  verify {float(t_ver):.4f}s")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[1000, 10000, 100000])
    parser.add_argument("--repeats", type=int, default=7)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()
    print(f"backends available: {backend.available()}")
    bench_kernels(args.sizes, args.repeats)
    if not args.skip_e2e:
        bench_e2e()


if __name__ == "__main__":
    main()
