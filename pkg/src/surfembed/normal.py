"""Normal surfaces in standard (triangle-quadrilateral) coordinates.

Each tetrahedron contributes seven coordinates: triangles cutting off
vertices 0, 1, 2, 3, then quadrilaterals separating {0,1}|{2,3},
{0,2}|{1,3} and {0,3}|{1,2}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .homology import IntegerMatrix
from .triangulation import Triangulation, face_vertices
from .unionfind import SignedUnionFind, UnionFind

QUAD_PAIRS = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))


def quad_type(a: int, b: int) -> int:
    """The quadrilateral type pairing vertex a with vertex b."""
    for q, (p1, p2) in enumerate(QUAD_PAIRS):
        if {a, b} in ({*p1}, {*p2}):
            return q
    raise ValueError(f"no quadrilateral pairs {a} with {b}")


def quad_partner(q: int, v: int) -> int:
    for pair in QUAD_PAIRS[q]:
        if v in pair:
            return pair[1] if pair[0] == v else pair[0]
    raise ValueError(v)


def quads_separating(a: int, b: int) -> tuple[int, int]:
    """The two quadrilateral types meeting edge ab."""
    return tuple(q for q in range(3) if q != quad_type(a, b))


# arc on face f cutting corner w is induced by triangle w and by the
# quadrilateral pairing f with w
ARC_QUAD = {(f, w): quad_type(f, w) for f in range(4) for w in range(4) if f != w}


class NotAdmissibleError(ValueError):
    pass


class IncompatibleError(ValueError):
    def __init__(self, tet):
        self.tet = tet
        super().__init__(f"different quadrilateral types in tetrahedron {tet}")


def tri_index(i, v):
    return 7 * i + v


def quad_index(i, q):
    return 7 * i + 4 + q


def _check_length(tri, x):
    if len(x) != 7 * tri.tet_count:
        raise ValueError(f"expected {7 * tri.tet_count} coordinates, got {len(x)}")
    if any(v < 0 for v in x):
        raise ValueError("normal coordinates must be nonnegative")


# -- equations ----------------------------------------------------------------


def matching_rows(tri: Triangulation):
    """Matching equations as a list of sparse rows ``{column: coefficient}``."""
    if not tri.is_closed:
        raise ValueError("matching equations need a closed triangulation")
    rows = []
    sk = tri.skeleton
    for members in sk.face_classes:
        i, f = members[0]
        j, p = tri.gluings[i][f]
        g = p(f)
        for w in face_vertices(f):
            row = {}
            pw = p(w)
            for col, s in ((tri_index(i, w), 1), (quad_index(i, ARC_QUAD[(f, w)]), 1),
                           (tri_index(j, pw), -1), (quad_index(j, ARC_QUAD[(g, pw)]), -1)):
                row[col] = row.get(col, 0) + s
            rows.append({c: v for c, v in row.items() if v})
    return rows


def matching_matrix(tri: Triangulation) -> IntegerMatrix:
    rows = matching_rows(tri)
    return IntegerMatrix(len(rows), 7 * tri.tet_count,
                         {(r, c): v for r, row in enumerate(rows) for c, v in row.items()})


def matching_residual(tri: Triangulation, x) -> list[int]:
    return [sum(v * x[c] for c, v in row.items()) for row in matching_rows(tri)]


def quad_constraint_ok(x) -> bool:
    return all(sum(1 for q in range(3) if x[7 * i + 4 + q]) <= 1
               for i in range(len(x) // 7))


def is_admissible(tri: Triangulation, x) -> bool:
    _check_length(tri, x)
    return quad_constraint_ok(x) and not any(matching_residual(tri, x))


def vertex_link_coordinates(tri: Triangulation, vertex_class: int) -> tuple[int, ...]:
    x = [0] * (7 * tri.tet_count)
    for i, v in tri.skeleton.vertex_classes[vertex_class]:
        x[tri_index(i, v)] += 1
    return tuple(x)


def haken_sum(tri: Triangulation, x, y) -> tuple[int, ...]:
    """Coordinate-wise sum of two compatible admissible surfaces."""
    for v in (x, y):
        if not is_admissible(tri, v):
            raise NotAdmissibleError("summand is not admissible")
    for i in range(tri.tet_count):
        qs = {q for q in range(3) for v in (x, y) if v[quad_index(i, q)]}
        if len(qs) > 1:
            raise IncompatibleError(i)
    return tuple(a + b for a, b in zip(x, y))


def points_on_edge(x, i, a, b) -> int:
    q1, q2 = quads_separating(a, b)
    return (x[tri_index(i, a)] + x[tri_index(i, b)]
            + x[quad_index(i, q1)] + x[quad_index(i, q2)])


def edge_degree(tri: Triangulation, x) -> int:
    """Intersections with the 1-skeleton: one count per edge class."""
    _check_length(tri, x)
    total = 0
    for members in tri.skeleton.edge_classes:
        i, (a, b) = members[0]
        total += points_on_edge(x, i, a, b)
    return total


def euler_characteristic(tri: Triangulation, x) -> int:
    """Euler characteristic from the linear vertex/arc/disk counts."""
    _check_length(tri, x)
    sk = tri.skeleton
    v = edge_degree(tri, x)
    e = 0
    for members in sk.face_classes:
        i, f = members[0]
        for w in face_vertices(f):
            e += x[tri_index(i, w)] + x[quad_index(i, ARC_QUAD[(f, w)])]
    return v - e + sum(x)


# -- reconstruction -----------------------------------------------------------


@dataclass(frozen=True)
class Component:
    euler_characteristic: int
    orientable: bool
    euler_genus: int
    disk_count: int
    coordinates: tuple


@dataclass(frozen=True)
class SurfaceSummary:
    components: tuple
    edge_degree: int

    @property
    def euler_characteristic(self) -> int:
        return sum(c.euler_characteristic for c in self.components)

    def as_dict(self) -> dict:
        return {
            "components": [
                {"euler_characteristic": c.euler_characteristic,
                 "orientable": c.orientable, "euler_genus": c.euler_genus,
                 "disk_count": c.disk_count}
                for c in self.components],
            "edge_degree": self.edge_degree,
        }


def _disks(x, i):
    """Disks of tetrahedron i with their cyclic vertex sequences.

    A vertex is ``(from, to, r)``: the r-th point from vertex ``from`` along
    edge ``{from, to}``. Triangles of type w are stacked outward from w; the
    copies of quadrilateral q are numbered from its first vertex pair.
    """
    out = []
    for w in range(4):
        others = face_vertices(w)
        for k in range(x[tri_index(i, w)]):
            out.append((("t", w, k), [(w, o, k) for o in others]))
    for q in range(3):
        n = x[quad_index(i, q)]
        (a, b), (c, d) = QUAD_PAIRS[q]
        for k in range(n):
            near_ab = [x[tri_index(i, a)] + k, x[tri_index(i, b)] + k]
            # cyclic: on ac, ad, bd, bc
            verts = [(a, c, near_ab[0]), (a, d, near_ab[0]),
                     (b, d, near_ab[1]), (b, c, near_ab[1])]
            out.append((("q", q, k), verts))
    return out


def _canonical_point(x, i, frm, to, r):
    a, b = min(frm, to), max(frm, to)
    s = r if frm == a else points_on_edge(x, i, a, b) - 1 - r
    return (i, a, b, s)


def _arc_of(x, i, u, v):
    """Arc ``(face, corner, position)`` joining two disk vertices in tet i."""
    (f1, t1, r1), (f2, t2, r2) = u, v
    if f1 == f2:
        corner, pos = f1, r1
        face = ({0, 1, 2, 3} - {f1, t1, t2}).pop()
    else:
        # quadrilateral sides share the far endpoint: (a,c)->(b,c) share c
        corner = t1
        face = ({0, 1, 2, 3} - {f1, f2, t1}).pop()
        n = points_on_edge(x, i, f1, t1)
        pos = n - 1 - r1
    return (i, face, corner, pos)


def reconstruct(tri: Triangulation, x) -> SurfaceSummary:
    """Build the normal surface cell by cell and classify its components."""
    _check_length(tri, x)
    if not is_admissible(tri, x):
        raise NotAdmissibleError("coordinates violate the matching equations "
                                 "or the quadrilateral constraint")
    x = tuple(x)
    disks = []  # (tet, disk id, canonical points)
    arc_owner = {}
    for i in range(tri.tet_count):
        for did, verts in _disks(x, i):
            pts = [_canonical_point(x, i, *v) for v in verts]
            for n in range(len(verts)):
                u, v = verts[n], verts[(n + 1) % len(verts)]
                # the direction is recorded by the tet-local edges of the ends
                arc_owner[_arc_of(x, i, u, v)] = (len(disks), (frozenset(u[:2]), frozenset(v[:2])))
            disks.append((i, did, pts))

    comp = UnionFind(range(len(disks)))
    orient = SignedUnionFind(range(len(disks)))
    points = UnionFind(p for d in disks for p in d[2])
    for arc, (dk, (e1, e2)) in arc_owner.items():
        i, face, corner, pos = arc
        j, p = tri.gluings[i][face]
        partner = (j, p(face), p(corner), pos)
        if arc > partner:
            continue
        dk2, (g1, g2) = arc_owner[partner]
        comp.union(dk, dk2)
        pe1 = frozenset(p(v) for v in e1)
        pe2 = frozenset(p(v) for v in e2)
        same = (pe1, pe2) == (g1, g2)
        if not same and (pe1, pe2) != (g2, g1):
            raise AssertionError("arc endpoints disagree across a face")
        orient.union(dk, dk2, -1 if same else 1)
        # identify the endpoints of the two arcs
        for ev in (e1, e2):
            frm = corner
            to = next(iter(ev - {corner}))
            here = _canonical_point(x, i, frm, to, pos)
            there = _canonical_point(x, j, p(frm), p(to), pos)
            points.union(here, there)

    groups = comp.groups()
    components = []
    for g in groups:
        pts = {points.find(pt) for d in g for pt in disks[d][2]}
        arcs = sum(len(disks[d][2]) for d in g)
        chi = len(pts) - arcs // 2 + len(g)
        ok = all(orient.consistent(d) for d in g)
        coords = [0] * len(x)
        for d in g:
            i, (kind, typ, _), _ = disks[d]
            coords[tri_index(i, typ) if kind == "t" else quad_index(i, typ)] += 1
        components.append(Component(chi, ok, 2 - chi, len(g), tuple(coords)))
    components.sort(key=lambda c: (c.euler_characteristic, c.disk_count, c.coordinates))
    return SurfaceSummary(tuple(components), len(points.groups()))


# -- coordinate files ---------------------------------------------------------


class CoordinateFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def serialize_coordinates(x) -> str:
    if len(x) % 7:
        raise ValueError("coordinate vector length must be a multiple of 7")
    t = len(x) // 7
    lines = [f"ns {t}"]
    lines += [" ".join(str(v) for v in x[7 * i:7 * i + 7]) for i in range(t)]
    return "\n".join(lines) + "\n"


def parse_coordinates(text) -> tuple[int, ...]:
    if isinstance(text, bytes):
        text = text.decode()
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), start=1)]
    lines = [(n, ln) for n, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CoordinateFormatError("empty input", 1)
    n0, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "ns" or not parts[1].isdigit():
        raise CoordinateFormatError("expected header 'ns <t>'", n0)
    t = int(parts[1])
    if len(lines) - 1 != t:
        raise CoordinateFormatError(f"expected {t} rows, found {len(lines) - 1}", n0)
    out = []
    for n, ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 7:
            raise CoordinateFormatError("each row needs 7 integers", n)
        try:
            vals = [int(tok) for tok in toks]
        except ValueError:
            raise CoordinateFormatError("entries must be integers", n) from None
        if any(v < 0 for v in vals):
            raise CoordinateFormatError("entries must be nonnegative", n)
        out += vals
    return tuple(out)
