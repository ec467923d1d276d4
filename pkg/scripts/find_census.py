"""Random search for small closed 3-manifold triangulations.

Prints one entry per distinct (tet count, H_1, orientability, vertex count)
signature found, in the text triangulation format.

    python scripts/find_census.py --tets 1 2 3 --tries 20000 --seed 1
"""
import argparse
import random

from surfembed.homology import homology
from surfembed.perm import Perm4
from surfembed.triangulation import (Triangulation, check_closed_3_manifold,
                                     is_orientable, serialize_triangulation)


def random_closed(t, rng):
    faces = [(i, f) for i in range(t) for f in range(4)]
    rng.shuffle(faces)
    rows = [[None] * 4 for _ in range(t)]
    perms = Perm4.all()
    for k in range(0, len(faces), 2):
        (i, f), (j, g) = faces[k], faces[k + 1]
        # any permutation sending f to g
        p = rng.choice([q for q in perms if q(f) == g])
        rows[i][f] = (j, p)
        rows[j][g] = (i, p.inverse())
    return Triangulation(t, rows)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tets", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--tries", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    seen = {}
    for t in args.tets:
        for _ in range(args.tries):
            tri = random_closed(t, rng)
            if not check_closed_3_manifold(tri).is_manifold:
                continue
            sig = (t, str(homology(tri, 1)), is_orientable(tri),
                   len(tri.skeleton.vertex_classes))
            if sig not in seen:
                seen[sig] = tri
    for sig, tri in sorted(seen.items(), key=lambda kv: str(kv[0])):
        print("#", sig)
        print(serialize_triangulation(tri))


if __name__ == "__main__":
    main()
