"""Cellular homology over Z and Z/2 via Smith normal form."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .surface import EDGE_ENDS, SurfaceTriangulation
from .triangulation import Triangulation, face_vertices


class IntegerMatrix:
    """Sparse integer matrix; arbitrary-precision entries."""

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows = rows
        self.cols = cols
        self.entries = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < rows and 0 <= c < cols):
                raise IndexError(f"entry ({r},{c}) outside {rows}x{cols}")
            if v:
                self.entries[(r, c)] = int(v)

    @classmethod
    def from_dense(cls, rows) -> IntegerMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, {(i, j): v for i, r in enumerate(rows)
                                      for j, v in enumerate(r) if v})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def add(self, r, c, v):
        v = self.entries.get((r, c), 0) + v
        if v:
            self.entries[(r, c)] = v
        else:
            self.entries.pop((r, c), None)

    def __matmul__(self, other: IntegerMatrix) -> IntegerMatrix:
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        by_row = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out = IntegerMatrix(self.rows, other.cols)
        for (r, k), v in self.entries.items():
            for c, w in by_row.get(k, ()):
                out.add(r, c, v * w)
        return out

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, IntegerMatrix) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


# -- Smith normal form (dense, with certificates) -----------------------------


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m):
    """Return ``(diagonal, U, V)`` with ``U * m * V`` diagonal.

    ``diagonal`` lists the nonzero elementary divisors d1 | d2 | ... followed
    by zeros up to ``min(rows, cols)``. ``U`` and ``V`` are unimodular.
    Pivots are chosen by smallest absolute value.
    """
    a = m.to_dense() if isinstance(m, IntegerMatrix) else [list(r) for r in m]
    nr = len(a)
    nc = len(a[0]) if nr else (m.cols if isinstance(m, IntegerMatrix) else 0)
    u = _identity(nr)
    v = _identity(nc)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):  # row dst += k * row src
        if k:
            a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
            u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, k):  # col dst += k * col src
        if k:
            for row in a:
                row[dst] += k * row[src]
            for row in v:
                row[dst] += k * row[src]

    t = 0
    while t < min(nr, nc):
        best = None
        for i in range(t, nr):
            for j in range(t, nc):
                x = a[i][j]
                if x and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if not dirty:
                # divisibility: fold in any entry the pivot does not divide
                bad = next(((i, j) for i in range(t + 1, nr) for j in range(t + 1, nc)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                add_row(bad[0], t, 1)
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(a[i][t]), i, t) for i in range(t, nr) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t, nc) if a[t][j]]
            _, i, j = min(cands)
            swap_rows(t, i)
            swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    diag = [a[i][i] for i in range(min(nr, nc))]
    return diag, u, v


def _eliminate(rows, cols, r, c):
    """Clear column c with the unit pivot at (r, c), then drop row r."""
    prow = rows.pop(r)
    pv = prow[c]
    for cc in prow:
        cols[cc].discard(r)
    for r2 in list(cols[c]):
        row2 = rows[r2]
        k = row2[c] * pv  # pv is +-1, so this is row2[c] / pv
        for cc, val in prow.items():
            nv = row2.get(cc, 0) - k * val
            if nv:
                if cc not in row2:
                    cols[cc].add(r2)
                row2[cc] = nv
            elif cc in row2:
                del row2[cc]
                cols[cc].discard(r2)
        if not row2:
            del rows[r2]
    for cc in prow:
        if not cols.get(cc):
            cols.pop(cc, None)


def _sparse_divisors(m: IntegerMatrix):
    """Rank and non-unit elementary divisors, eliminating unit pivots sparsely."""
    rows = {}
    cols = {}
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols.setdefault(c, set()).add(r)
    units = 0
    progress = True
    while progress:
        progress = False
        for c in sorted(cols):
            rs = cols.get(c)
            if not rs:
                continue
            cand = [r for r in rs if abs(rows[r][c]) == 1]
            if not cand:
                continue
            r = min(cand, key=lambda x: (len(rows[x]), x))
            _eliminate(rows, cols, r, c)
            units += 1
            progress = True
    if not rows:
        return units, []
    rlist = sorted(rows)
    clist = sorted({c for row in rows.values() for c in row})
    cidx = {c: k for k, c in enumerate(clist)}
    dense = [[0] * len(clist) for _ in rlist]
    for i, r in enumerate(rlist):
        for c, v in rows[r].items():
            dense[i][cidx[c]] = v
    diag, _, _ = smith_normal_form(dense)
    nz = [d for d in diag if d]
    return units + len(nz), [d for d in nz if d != 1]


def elementary_divisors(m: IntegerMatrix):
    """Return ``(rank, divisors)`` where divisors are the entries > 1."""
    return _sparse_divisors(m)


def rank_mod2(m: IntegerMatrix) -> int:
    rows = {}
    for (r, c), v in m.entries.items():
        if v % 2:
            rows[r] = rows.get(r, 0) ^ (1 << c)
    pivots = {}
    rank = 0
    for bits in rows.values():
        while bits:
            top = bits.bit_length() - 1
            if top in pivots:
                bits ^= pivots[top]
            else:
                pivots[top] = bits
                rank += 1
                break
    return rank


# -- chain complexes ----------------------------------------------------------


def _triangulation_boundaries(tri: Triangulation):
    sk = tri.skeleton
    if sk.reversed_edges:
        raise ValueError("an edge is identified with itself in reverse; "
                         "the gluing is not a cell complex")
    nv, ne, nf, nt = (len(sk.vertex_classes), len(sk.edge_classes),
                      len(sk.face_classes), tri.tet_count)
    d1 = IntegerMatrix(nv, ne)
    for k, members in enumerate(sk.edge_classes):
        i, (a, b) = members[0]
        d1.add(sk.vertex_of[(i, b)], k, 1)
        d1.add(sk.vertex_of[(i, a)], k, -1)
    d2 = IntegerMatrix(ne, nf)
    for k, members in enumerate(sk.face_classes):
        i, f = members[0]
        fv = face_vertices(f)
        for n in range(3):
            e = tuple(x for x in fv if x != fv[n])
            d2.add(sk.edge_of[(i, e)], k, (-1) ** n * sk.edge_sign[(i, e)])
    d3 = IntegerMatrix(nf, nt)
    for i in range(nt):
        for f in range(4):
            d3.add(sk.face_of[(i, f)], i, (-1) ** f * sk.face_sign[(i, f)])
    return [d1, d2, d3], [nv, ne, nf, nt]


def _surface_boundaries(s: SurfaceTriangulation):
    vidx = s.vertex_index
    nv = len(s.vertex_classes)
    edge_classes = s.edge_classes
    eidx = {}
    for k, members in enumerate(edge_classes):
        t, e = members[0]
        eidx[(t, e)] = (k, 1)
        if len(members) == 2:
            u, l = members[1]
            rev = s.gluings[t][e][2]
            eidx[(u, l)] = (k, -1 if rev else 1)
    d1 = IntegerMatrix(nv, len(edge_classes))
    for k, members in enumerate(edge_classes):
        t, e = members[0]
        a, b = EDGE_ENDS[e]
        d1.add(vidx[(t, b)], k, 1)
        d1.add(vidx[(t, a)], k, -1)
    d2 = IntegerMatrix(len(edge_classes), s.triangle_count)
    # boundary of [v0 v1 v2] = [v1 v2] - [v0 v2] + [v0 v1]; edge e is opposite v_e
    for t in range(s.triangle_count):
        for e in range(3):
            k, sg = eidx[(t, e)]
            d2.add(k, t, (-1) ** e * sg)
    return [d1, d2], [nv, len(edge_classes), s.triangle_count]


def simplicial_boundaries(simplices):
    """Boundary matrices of the simplicial complex generated by ``simplices``."""
    top = max(len(s) for s in simplices) - 1
    cells = [set() for _ in range(top + 1)]
    for s in simplices:
        s = tuple(sorted(s))
        for d in range(len(s)):
            cells[d].update(combinations(s, d + 1))
    cells = [sorted(c) for c in cells]
    index = [{c: n for n, c in enumerate(cs)} for cs in cells]
    mats = []
    for d in range(1, top + 1):
        m = IntegerMatrix(len(cells[d - 1]), len(cells[d]))
        for n, c in enumerate(cells[d]):
            for k in range(len(c)):
                m.add(index[d - 1][c[:k] + c[k + 1:]], n, (-1) ** k)
        mats.append(m)
    return mats, [len(c) for c in cells]


def chain_complex(obj):
    """``(boundary matrices d_1..d_top, cell counts per dimension)``."""
    if isinstance(obj, Triangulation):
        return _triangulation_boundaries(obj)
    if isinstance(obj, SurfaceTriangulation):
        return _surface_boundaries(obj)
    if hasattr(obj, "triangles"):
        return simplicial_boundaries(obj.triangles)
    return simplicial_boundaries(obj)


def boundary_matrix(obj, k: int) -> IntegerMatrix:
    """The boundary map from k-cells to (k-1)-cells."""
    mats, counts = chain_complex(obj)
    if not 1 <= k <= len(mats):
        raise ValueError(f"boundary dimension {k} out of range 1..{len(mats)}")
    return mats[k - 1]


@dataclass(frozen=True)
class HomologyGroup:
    free_rank: int
    torsion: tuple = ()

    def __post_init__(self):
        t = tuple(self.torsion)
        object.__setattr__(self, "torsion", t)
        if any(d < 2 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisibility chain")

    def has_element_of_order(self, n: int) -> bool:
        return any(d % n == 0 for d in self.torsion)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology(obj, k: int, coefficients: str = "Z") -> HomologyGroup:
    mats, counts = chain_complex(obj)
    if not 0 <= k < len(counts):
        raise ValueError(f"dimension {k} out of range")
    if coefficients == "Z2":
        r_out = rank_mod2(mats[k - 1]) if k >= 1 else 0
        r_in = rank_mod2(mats[k]) if k < len(mats) else 0
        return HomologyGroup(counts[k] - r_out - r_in)
    if coefficients != "Z":
        raise ValueError("coefficients must be 'Z' or 'Z2'")
    r_out = elementary_divisors(mats[k - 1])[0] if k >= 1 else 0
    if k < len(mats):
        r_in, divs = elementary_divisors(mats[k])
    else:
        r_in, divs = 0, []
    return HomologyGroup(counts[k] - r_out - r_in, tuple(sorted(divs)))


def betti_numbers_mod2(obj) -> list[int]:
    mats, counts = chain_complex(obj)
    ranks = [0] + [rank_mod2(m) for m in mats] + [0]
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(len(counts))]
