"""Compare the numba and numpy kernel backends.

    python3 benchmarks/bench_kernels.py [--lo 10000000] [--size 1048576] [--repeat 3]

Each backend is warmed up once (JIT compile time is reported separately),
then timed on the same inputs; outputs are checked for equality.
"""

import argparse
import math
import time

import numpy as np

from wcn.arith import primes_upto
from wcn.kernels import available, load


def best_of(fn, repeat):
    best = math.inf
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=10**7)
    ap.add_argument("--size", type=int, default=1 << 20)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--powsum-n", type=int, default=200003, help="modulus for the power-sum kernel")
    args = ap.parse_args()

    lo, hi = args.lo, args.lo + args.size
    primes = primes_upto(math.isqrt(hi) + 1)
    m = args.powsum_n
    bases = np.arange(1, m, dtype=np.int64)
    big = (1 << 45) + 59  # exercises the wide mulmod path

    results = {}
    print(f"{'backend':8} {'kernel':36} {'warmup s':>9} {'best s':>9}")
    for name in available():
        k = load(name)
        cases = {
            f"segment_stats [{lo},{hi})": lambda: k.segment_stats(lo, hi, primes),
            f"powsum_mod n={m}": lambda: k.powsum_mod(bases, m - 1, m),
            "powsum_mod mod~2^45": lambda: k.powsum_mod(bases[:50000], m - 1, big),
        }
        for label, fn in cases.items():
            t = time.perf_counter()
            fn()
            warm = time.perf_counter() - t
            best, out = best_of(fn, args.repeat)
            results.setdefault(label, {})[name] = (best, out)
            print(f"{name:8} {label:36} {warm:9.3f} {best:9.3f}")

    print()
    for label, by in results.items():
        outs = [o for _, o in by.values()]
        same = all(_equal(outs[0], o) for o in outs[1:])
        line = f"{label:36} outputs {'agree' if same else 'DIFFER'}"
        if "numba" in by and "numpy" in by:
            line += f"  speedup x{by['numpy'][0] / by['numba'][0]:.1f}"
        print(line)


def _equal(a, b):
    if isinstance(a, tuple):
        return all(np.array_equal(x, y) for x, y in zip(a, b))
    return int(a) == int(b)


if __name__ == "__main__":
    main()
