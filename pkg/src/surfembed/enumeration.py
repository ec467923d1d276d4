"""Vertex and fundamental normal surfaces at desk scale.

Vertex surfaces come from a double description pass over the matching
equations, starting from the nonnegative orthant and discarding any ray
whose support breaks the quadrilateral constraint. Fundamental surfaces
are the admissible minimal solutions of the full solution monoid.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from . import normal
from .triangulation import Triangulation


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class EnumerationConfig:
    vertex_cap: int = 10
    fundamental_cap: int = 6


DEFAULT_CONFIG = EnumerationConfig()


def _support_ok(support: frozenset, t: int) -> bool:
    for i in range(t):
        if sum(1 for q in range(3) if 7 * i + 4 + q in support) > 1:
            return False
    return True


def _primitive(v):
    g = 0
    for a in v:
        g = gcd(g, a)
    return tuple(a // g for a in v) if g > 1 else tuple(v)


def _row_value(row, v):
    return sum(c * v[k] for k, c in row.items())


def vertex_surfaces(tri: Triangulation, config: EnumerationConfig = DEFAULT_CONFIG):
    """Primitive integer vectors on the admissible extreme rays, sorted."""
    t = tri.tet_count
    if t > config.vertex_cap:
        raise CapExceeded(f"{t} tetrahedra exceeds the vertex enumeration cap "
                          f"{config.vertex_cap}")
    rows = normal.matching_rows(tri)
    n = 7 * t
    rays = [tuple(1 if k == j else 0 for k in range(n)) for j in range(n)]
    # each ray is carried with its zero set over the coordinate inequalities
    for row in rows:
        values = [_row_value(row, r) for r in rays]
        zero = [r for r, a in zip(rays, values) if a == 0]
        pos = [(r, a) for r, a in zip(rays, values) if a > 0]
        neg = [(r, a) for r, a in zip(rays, values) if a < 0]
        if not pos and not neg:
            continue
        zsets = [frozenset(k for k in range(n) if r[k] == 0) for r in rays]
        new = []
        for r, a in pos:
            zr = frozenset(k for k in range(n) if r[k] == 0)
            for s, b in neg:
                zs = frozenset(k for k in range(n) if s[k] == 0)
                support = frozenset(range(n)) - (zr & zs)
                if not _support_ok(support, t):
                    continue
                common = zr & zs
                # combinatorial adjacency: no third ray vanishes on common
                if any(common <= z for z, u in zip(zsets, rays)
                       if u is not r and u is not s):
                    continue
                new.append(_primitive(tuple(a * sk - b * rk for rk, sk in zip(r, s))))
        rays = list(dict.fromkeys(zero + new))
    return sorted(rays)


def _rref(rows, columns):
    """Reduced row echelon form over the rationals, restricted to ``columns``.

    Returns ``(pivots, free, expr)`` where ``expr[p]`` maps each free column
    to its coefficient in the expression of pivot column ``p``.
    """
    mat = [[Fraction(row.get(c, 0)) for c in columns] for row in rows]
    mat = [r for r in mat if any(r)]
    pivots = []
    r = 0
    for c in range(len(columns)):
        pr = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [a * inv for a in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(len(columns)) if c not in pivots]
    expr = {columns[p]: {columns[f]: -mat[i][f] for f in free if mat[i][f]}
            for i, p in enumerate(pivots)}
    return [columns[p] for p in pivots], [columns[f] for f in free], expr


def _box_solutions(rows, columns, bound):
    """Nonzero integer solutions supported on ``columns`` within ``bound``."""
    pivots, free, expr = _rref(rows, columns)
    out = []

    def rec(k, assign):
        if k == len(free):
            x = dict(assign)
            for p in pivots:
                v = sum(c * assign[f] for f, c in expr[p].items())
                if v.denominator != 1 or not 0 <= v <= bound[p]:
                    return
                x[p] = int(v)
            if any(x.values()):
                out.append(x)
            return
        f = free[k]
        for v in range(bound[f] + 1):
            assign[f] = v
            rec(k + 1, assign)
        del assign[f]

    rec(0, {})
    return out


def _rank(vectors):
    rows = [{k: a for k, a in enumerate(v) if a} for v in vectors]
    if not rows:
        return 0
    cols = sorted({k for r in rows for k in r})
    return len(_rref(rows, cols)[0])


def fundamental_surfaces(tri: Triangulation, config: EnumerationConfig = DEFAULT_CONFIG):
    """Admissible Hilbert basis of the matching equations, sorted.

    Each maximal quadrilateral pattern (one quad type per tetrahedron) cuts a
    face out of the solution cone. A Hilbert basis element of that face is
    either a primitive extreme ray or lies strictly inside the parallelepiped
    of some simplicial subcone, so its entries are bounded by sums of the
    largest ray entries; the lattice points in that box are enumerated and
    the minimal ones kept.
    """
    t = tri.tet_count
    if t > config.fundamental_cap:
        raise CapExceeded(f"{t} tetrahedra exceeds the Hilbert basis cap "
                          f"{config.fundamental_cap}")
    n = 7 * t
    rows = normal.matching_rows(tri)
    rays = vertex_surfaces(tri, EnumerationConfig(max(config.vertex_cap, t),
                                                  config.fundamental_cap))
    found = set()
    for pattern in product(range(3), repeat=t):
        allowed = [k for i in range(t) for k in
                   (*range(7 * i, 7 * i + 4), 7 * i + 4 + pattern[i])]
        allowed_set = set(allowed)
        face_rays = [r for r in rays
                     if all(k in allowed_set for k in range(n) if r[k])]
        if not face_rays:
            continue
        d = _rank(face_rays)
        bound = {k: sum(sorted((r[k] for r in face_rays), reverse=True)[:d])
                 for k in allowed}
        support = [k for k in allowed if bound[k] > 0]
        for x in _box_solutions(rows, support, bound):
            found.add(tuple(x.get(k, 0) for k in range(n)))
    # minimal elements; a solution above another differs by a solution
    basis = []
    for v in sorted(found, key=lambda v: (sum(v), v)):
        if not any(all(b[k] <= v[k] for k in range(n)) for b in basis):
            basis.append(v)
    return sorted(basis)


def decompose(x, basis):
    """Write x as a sum of basis vectors, or return None."""
    x = tuple(x)
    if not any(x):
        return []
    for b in basis:
        if any(b) and all(bk <= xk for bk, xk in zip(b, x)):
            rest = decompose(tuple(xk - bk for bk, xk in zip(b, x)), basis)
            if rest is not None:
                return [b] + rest
    return None


@dataclass(frozen=True)
class OddGenusResult:
    genus: int
    coordinates: tuple


def min_odd_genus(tri: Triangulation, config: EnumerationConfig = DEFAULT_CONFIG):
    """Smallest odd Euler genus among connected fundamental surfaces.

    The answer equals the smallest odd genus of an embedded surface only
    when the input is irreducible; that is the caller's responsibility.
    """
    if not tri.is_closed:
        raise ValueError("triangulation must be closed")
    best = None
    for x in fundamental_surfaces(tri, config):
        summary = normal.reconstruct(tri, x)
        if len(summary.components) != 1:
            continue
        g = summary.components[0].euler_genus
        if g % 2 == 1 and (best is None or (g, x) < (best.genus, best.coordinates)):
            best = OddGenusResult(g, x)
    return best
