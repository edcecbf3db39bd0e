"""Benchmark the compiled sparse-vector kernels against the pure-Python
fallback.

Run:  python3 benchmarks/bench_ops.py
"""

import random
import timeit

from tensorparse import _pyops

try:
    from tensorparse import _speedups
except ImportError:
    _speedups = None

VOCAB = [f"tok{i}" for i in range(2000)]


def random_vec(rng, size):
    return {t: 1.0 for t in rng.sample(VOCAB, size)}


def bench(label, fn, number):
    seconds = timeit.timeit(fn, number=number)
    per_call = seconds / number * 1e6
    print(f"  {label:<10} {per_call:10.2f} us/call")
    return per_call


def main():
    rng = random.Random(0)
    pairs = [(random_vec(rng, 40), random_vec(rng, 40)) for _ in range(200)]
    sides = [(random_vec(rng, 12), random_vec(rng, 9)) for _ in range(200)]

    backends = [("python", _pyops)]
    if _speedups is not None:
        backends.append(("cython", _speedups))
    else:
        print("compiled extension not built; benchmarking fallback only")

    print("dot (40x40 sparse binary vectors)")
    base = None
    for label, mod in backends:
        t = bench(label, lambda m=mod: [m.dot(a, b) for a, b in pairs], 50)
        base = base or t
        if label != "python":
            print(f"  speedup vs python: {base / t:.2f}x")

    print("tensor_pair (12x9 unigram vectors)")
    base = None
    for label, mod in backends:
        t = bench(label, lambda m=mod: [m.tensor_pair(q, u) for q, u in sides], 50)
        base = base or t
        if label != "python":
            print(f"  speedup vs python: {base / t:.2f}x")


if __name__ == "__main__":
    main()
