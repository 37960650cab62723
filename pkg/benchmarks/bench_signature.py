"""Compare the compiled and pure-Python signature kernels.

    python3 benchmarks/bench_signature.py [--repeat N]
"""

import argparse
import random
import time

from youngwalls.core import _sigkernel_py
from youngwalls.core.tensor import TensorElement, tensor_ftilde
from youngwalls.perfect_crystal import build_crystal

try:
    from youngwalls.core import _sigkernel
except ImportError:
    _sigkernel = None


def words(n, length, rng):
    out = []
    for _ in range(n):
        eps = [rng.randint(0, 2) for _ in range(length)]
        phi = [rng.randint(0, 2) for _ in range(length)]
        out.append((eps, phi))
    return out


def time_kernel(fn, data, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for eps, phi in data:
            fn(eps, phi)
        best = min(best, time.perf_counter() - t0)
    return best


def time_tensor_walk(kernel, repeat, rng):
    """Random f-walks on 12-fold tensor powers of B', with the given kernel patched in."""
    from youngwalls.core import tensor as tensor_mod

    crystal = build_crystal("f4-1")
    verts = crystal.vertices
    starts = [TensorElement(tuple(rng.choice(verts) for _ in range(12))) for _ in range(200)]
    saved = tensor_mod.reduce_counts
    tensor_mod.reduce_counts = kernel
    try:
        best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            for t in starts:
                for i in (0, 1, 2, 3, 4) * 4:
                    nxt = tensor_ftilde(crystal, t, i)
                    if nxt is not None:
                        t = nxt
            best = min(best, time.perf_counter() - t0)
    finally:
        tensor_mod.reduce_counts = saved
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"{'case':<28}{'python':>12}{'cython':>12}{'speedup':>10}")
    for length in (4, 16, 64, 256):
        data = words(2000, length, rng)
        tp = time_kernel(_sigkernel_py.reduce_counts, data, args.repeat)
        if _sigkernel is None:
            print(f"{'kernel, ' + str(length) + ' factors':<28}{tp:>12.4f}{'n/a':>12}")
            continue
        tc = time_kernel(_sigkernel.reduce_counts, data, args.repeat)
        print(f"{'kernel, ' + str(length) + ' factors':<28}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    tp = time_tensor_walk(_sigkernel_py.reduce_counts, args.repeat, rng)
    if _sigkernel is not None:
        tc = time_tensor_walk(_sigkernel.reduce_counts, args.repeat, rng)
        print(f"{'tensor f-walks (x12)':<28}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
    else:
        print(f"{'tensor f-walks (x12)':<28}{tp:>12.4f}{'n/a':>12}")


if __name__ == "__main__":
    main()
