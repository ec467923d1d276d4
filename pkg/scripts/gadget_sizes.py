"""Tetrahedron counts of the gadget for n = m = k.

    python scripts/gadget_sizes.py --max-k 8 --seed 2

Prints k, the triangle count of K, the tetrahedron count of M, and the
least squares line through the tetrahedron counts.
"""
import argparse
import random
import time

from surfembed.gadget import build_complex_K, build_gadget
from surfembed.sat import SatInstance


def instance(k, rng):
    clauses = tuple(tuple(rng.choice((1, -1)) * rng.randint(1, k) for _ in range(3))
                    for _ in range(k))
    return SatInstance(k, clauses)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-k", type=int, default=8)
    ap.add_argument("--seed", type=int, default=2)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    ks, sizes = [], []
    print(f"{'k':>3} {'triangles':>10} {'tets':>8} {'seconds':>8}")
    for k in range(1, args.max_k + 1):
        inst = instance(k, rng)
        start = time.perf_counter()
        m = build_gadget(inst)
        elapsed = time.perf_counter() - start
        ks.append(k)
        sizes.append(m.tet_count)
        print(f"{k:>3} {build_complex_K(inst).triangle_count:>10} {m.tet_count:>8} "
              f"{elapsed:>8.2f}")
    n = len(ks)
    mk, my = sum(ks) / n, sum(sizes) / n
    a = sum((k - mk) * (y - my) for k, y in zip(ks, sizes)) / sum((k - mk) ** 2 for k in ks)
    print(f"fit: tets = {a:.2f} * k + {my - a * mk:.2f}")


if __name__ == "__main__":
    main()
