"""Independent slow reference computations used by the test suite.

None of these share code paths with the library beyond reading the raw
gluing data of a triangulation.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd

from surfembed.perm import Perm4


# -- skeleton by fixed-point iteration ---------------------------------------


def naive_classes(tri):
    """Vertex, edge and face class counts by iterating labels to a fixed point."""
    t = tri.tet_count
    vlabel = {(i, v): (i, v) for i in range(t) for v in range(4)}
    elabel = {(i, e): (i, e) for i in range(t)
              for e in combinations(range(4), 2)}
    changed = True
    while changed:
        changed = False
        for i in range(t):
            for f in range(4):
                g = tri.gluings[i][f]
                if g is None:
                    continue
                j, p = g
                for v in range(4):
                    if v == f:
                        continue
                    a, b = vlabel[(i, v)], vlabel[(j, p(v))]
                    if a != b:
                        m = min(a, b)
                        vlabel[(i, v)] = vlabel[(j, p(v))] = m
                        changed = True
                for e in combinations([v for v in range(4) if v != f], 2):
                    img = tuple(sorted((p(e[0]), p(e[1]))))
                    a, b = elabel[(i, e)], elabel[(j, img)]
                    if a != b:
                        m = min(a, b)
                        elabel[(i, e)] = elabel[(j, img)] = m
                        changed = True
    faces = 0
    for i in range(t):
        for f in range(4):
            g = tri.gluings[i][f]
            if g is None or (g[0], g[1](f)) >= (i, f):
                faces += 1
    return len(set(vlabel.values())), len(set(elabel.values())), faces


# -- integer matrices ---------------------------------------------------------


def rational_rank(rows):
    mat = [[Fraction(a) for a in r] for r in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pr = next((i for i in range(rank, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[rank], mat[pr] = mat[pr], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c]:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def _det(m):
    # Bareiss fraction-free elimination
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def determinantal_divisors(rows):
    """Elementary divisors from gcds of k-by-k minors."""
    if not rows or not rows[0]:
        return 0, []
    r = rational_rank(rows)
    nr, nc = len(rows), len(rows[0])
    dk = [1]
    for k in range(1, r + 1):
        g = 0
        for rs in combinations(range(nr), k):
            for cs in combinations(range(nc), k):
                g = gcd(g, _det([[rows[i][j] for j in cs] for i in rs]))
                if g == 1:
                    break
            if g == 1:
                break
        dk.append(g)
    divisors = [dk[k] // dk[k - 1] for k in range(1, r + 1)]
    return r, divisors


# -- normal surfaces ----------------------------------------------------------

QUADS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def _arc_terms(i, f, w):
    """Coordinates whose disks leave an arc on face f around corner w."""
    other = [v for v in range(4) if v not in (f, w)]
    # the quad separating {w, f} from the other two vertices
    q = next(k for k, (a, b) in enumerate(QUADS)
             if {w, f} in (set(a), set(b)))
    del other
    return 7 * i + w, 7 * i + 4 + q


def matching_equations(tri):
    eqs = []
    for i in range(tri.tet_count):
        for f in range(4):
            j, p = tri.gluings[i][f]
            if (j, p(f)) < (i, f):
                continue
            for w in range(4):
                if w == f:
                    continue
                eqs.append((_arc_terms(i, f, w), _arc_terms(j, p(f), p(w))))
    return eqs


def bounded_admissible_solutions(tri, bound=10):
    """All nonzero admissible normal vectors with entries at most ``bound``.

    Depth-first over coordinates; an equation with a single open term fixes
    that term, an equation whose open terms cannot cancel its fixed part
    prunes, and a nonzero quad forces the other two quads of its
    tetrahedron to zero.
    """
    n = 7 * tri.tet_count
    rows = []
    for lhs, rhs in matching_equations(tri):
        coef = {}
        for c in lhs:
            coef[c] = coef.get(c, 0) + 1
        for c in rhs:
            coef[c] = coef.get(c, 0) - 1
        coef = {c: a for c, a in coef.items() if a}
        if coef:
            rows.append(coef)
    rows_of = [[] for _ in range(n)]
    for r, row in enumerate(rows):
        for c in row:
            rows_of[c].append(r)
    x = [None] * n
    out = []

    def assign(c, v, trail):
        if x[c] is not None:
            return x[c] == v
        if not 0 <= v <= bound:
            return False
        x[c] = v
        trail.append(c)
        if v and c % 7 >= 4:
            base = c - c % 7
            for q in range(4, 7):
                if base + q != c and not assign(base + q, 0, trail):
                    return False
        for r in rows_of[c]:
            row = rows[r]
            open_terms = [k for k in row if x[k] is None]
            total = sum(a * x[k] for k, a in row.items() if x[k] is not None)
            if not open_terms:
                if total:
                    return False
            elif len(open_terms) == 1:
                k = open_terms[0]
                if total % row[k]:
                    return False
                if not assign(k, -total // row[k], trail):
                    return False
            else:
                lo = total + sum(min(0, row[k] * bound) for k in open_terms)
                hi = total + sum(max(0, row[k] * bound) for k in open_terms)
                if not lo <= 0 <= hi:
                    return False
        return True

    def pick():
        # fail first: an open variable from the equation with fewest open terms
        best, best_open = None, None
        for row in rows:
            open_terms = [k for k in row if x[k] is None]
            if open_terms and (best_open is None or len(open_terms) < best_open):
                best, best_open = open_terms[0], len(open_terms)
        if best is None:
            best = next((k for k in range(n) if x[k] is None), None)
        return best

    def search():
        c = pick()
        if c is None:
            if any(x):
                out.append(tuple(x))
            return
        for v in range(bound + 1):
            trail = []
            if assign(c, v, trail):
                search()
            for k in trail:
                x[k] = None

    search()
    return out


def indecomposables(solutions):
    """Elements of a down-closed solution set not a sum of two others."""
    sols = set(solutions)
    out = []
    for x in sorted(sols, key=sum):
        # any smaller summand can be replaced by an indecomposable below it
        decomposable = any(
            all(a <= b for a, b in zip(y, x))
            and tuple(b - a for a, b in zip(y, x)) in sols
            for y in out)
        if not decomposable:
            out.append(x)
    return sorted(out)


def face_rank_extremal(tri, x):
    """Rank test: x spans an extreme ray iff the equations restricted to its
    support have a one-dimensional solution space."""
    support = [k for k in range(len(x)) if x[k]]
    rows = []
    for lhs, rhs in matching_equations(tri):
        row = [0] * len(support)
        for c in lhs:
            if c in support:
                row[support.index(c)] += 1
        for c in rhs:
            if c in support:
                row[support.index(c)] -= 1
        rows.append(row)
    return len(support) - rational_rank(rows) == 1


def random_perm(rng):
    return Perm4(tuple(rng.sample(range(4), 4)))
