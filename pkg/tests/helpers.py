"""Generators shared by the test modules."""
from __future__ import annotations

import random

from surfembed.perm import Perm4
from surfembed.sat import SatInstance
from surfembed.triangulation import Triangulation, parse_triangulation

from census import CENSUS

PERMS = Perm4.all()


def random_triangulation(t, rng, closed=True, boundary_prob=0.25):
    """Random face pairing; with ``closed=False`` some faces stay unglued."""
    faces = [(i, f) for i in range(t) for f in range(4)]
    rng.shuffle(faces)
    rows = [[None] * 4 for _ in range(t)]
    k = 0
    while k + 1 < len(faces):
        if not closed and rng.random() < boundary_prob:
            k += 1
            continue
        (i, f), (j, g) = faces[k], faces[k + 1]
        p = rng.choice([q for q in PERMS if q(f) == g])
        rows[i][f] = (j, p)
        rows[j][g] = (i, p.inverse())
        k += 2
    if closed and k < len(faces):
        raise AssertionError("odd number of faces")
    return Triangulation(t, rows)


def census(max_tets=3):
    out = {}
    for name, (text, h1, orientable, vertices) in CENSUS.items():
        tri = parse_triangulation(text)
        if tri.tet_count <= max_tets:
            out[name] = tri
    return out


def random_instance(rng, max_n=4, max_m=4):
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    clauses = [tuple(rng.choice((1, -1)) * rng.randint(1, n) for _ in range(3))
               for _ in range(m)]
    return SatInstance(n, tuple(clauses))


def generated_suite(count=20, seed=0):
    rng = random.Random(seed)
    return [random_instance(rng) for _ in range(count)]


NAMED_INSTANCES = {
    "repeated_with_negation": SatInstance(1, ((1, 1, -1),)),
    "three_variables": SatInstance(3, ((1, 2, 3),)),
    "triple_literal": SatInstance(1, ((1, 1, 1),)),
}


def quad_pattern(x):
    """Quad type used in each tetrahedron, or None."""
    out = []
    for i in range(len(x) // 7):
        qs = [q for q in range(3) if x[7 * i + 4 + q]]
        out.append(qs[0] if qs else None)
    return tuple(out)


def compatible(x, y):
    return all(a is None or b is None or a == b
               for a, b in zip(quad_pattern(x), quad_pattern(y)))


def random_combination(basis, rng, max_terms=3, max_coeff=2):
    """Nonnegative combination of mutually compatible basis vectors."""
    chosen = []
    for b in rng.sample(basis, len(basis)):
        if len(chosen) == max_terms:
            break
        if all(compatible(b, c) for c in chosen):
            chosen.append(b)
    n = len(basis[0])
    x = [0] * n
    for b in chosen:
        c = rng.randint(1, max_coeff)
        for k in range(n):
            x[k] += c * b[k]
    return tuple(x)


def relabel(tri, rng):
    """A random isomorphic copy: tetrahedra shuffled, vertices permuted."""
    order = list(range(tri.tet_count))
    rng.shuffle(order)
    perm = [rng.choice(PERMS) for _ in order]
    rows = [None] * tri.tet_count
    for i, row in enumerate(tri.gluings):
        s = perm[i]
        new = [None] * 4
        for f, g in enumerate(row):
            if g is not None:
                j, p = g
                new[s(f)] = (order[j], perm[j] * p * s.inverse())
        rows[order[i]] = new
    return Triangulation(tri.tet_count, rows)
