"""Generalized triangulations of 3-manifolds.

Faces of a tetrahedron are indexed by the opposite vertex. A gluing of face
``f`` of tetrahedron ``i`` is a pair ``(j, p)``: vertex ``v`` of tetrahedron
``i`` is identified with vertex ``p(v)`` of tetrahedron ``j``, and face ``f``
is glued to face ``p(f)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations

from .perm import Perm4, permutation_sign
from .surface import EDGE_ENDS, SurfaceTriangulation
from .unionfind import SignedUnionFind, UnionFind


class TriangulationFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def face_vertices(f: int) -> tuple[int, int, int]:
    return tuple(v for v in range(4) if v != f)


class Triangulation:
    """An immutable list of tetrahedra with face gluings."""

    def __init__(self, tet_count: int, gluings):
        self.tet_count = int(tet_count)
        rows = []
        for row in gluings:
            row = tuple(None if g is None else (int(g[0]), g[1] if isinstance(g[1], Perm4)
                                                else Perm4(tuple(g[1])))
                        for g in row)
            if len(row) != 4:
                raise ValueError("each tetrahedron needs four face entries")
            rows.append(row)
        if len(rows) != self.tet_count:
            raise ValueError(f"expected {self.tet_count} tetrahedra, got {len(rows)}")
        self.gluings = tuple(rows)
        for i, row in enumerate(self.gluings):
            for f, g in enumerate(row):
                problem = self._check_face(i, f, g)
                if problem:
                    raise ValueError(problem)

    def _check_face(self, i, f, g):
        if g is None:
            return None
        j, p = g
        if not 0 <= j < self.tet_count:
            return f"face ({i},{f}) glued to missing tetrahedron {j}"
        b = p(f)
        if (j, b) == (i, f):
            return f"face ({i},{f}) glued to itself"
        back = self.gluings[j][b]
        if back is None or back[0] != i or back[1] != p.inverse():
            return f"gluing of face ({i},{f}) is not involutive"
        return None

    def __eq__(self, other):
        return (isinstance(other, Triangulation) and self.tet_count == other.tet_count
                and self.gluings == other.gluings)

    def __hash__(self):
        return hash((self.tet_count, self.gluings))

    def __repr__(self):
        return f"Triangulation({self.tet_count} tetrahedra)"

    @property
    def is_closed(self) -> bool:
        return all(g is not None for row in self.gluings for g in row)

    def boundary_faces(self) -> list[tuple[int, int]]:
        return [(i, f) for i, row in enumerate(self.gluings)
                for f, g in enumerate(row) if g is None]

    @cached_property
    def skeleton(self) -> Skeleton:
        return compute_skeleton(self)

    # -- construction helpers -------------------------------------------

    @classmethod
    def from_tetrahedra(cls, tetrahedra) -> Triangulation:
        """Glue tetrahedra given as 4-tuples of vertex labels along equal faces."""
        tets = [tuple(t) for t in tetrahedra]
        faces = {}
        for i, t in enumerate(tets):
            if len(set(t)) != 4:
                raise ValueError(f"degenerate tetrahedron {t!r}")
            for f in range(4):
                key = frozenset(t[v] for v in face_vertices(f))
                faces.setdefault(key, []).append((i, f))
        gluings = [[None] * 4 for _ in tets]
        for key, where in faces.items():
            if len(where) > 2:
                raise ValueError(f"face {sorted(key, key=repr)!r} lies in {len(where)} tetrahedra")
            if len(where) == 2:
                (i, f), (j, g) = where
                pos = {lab: v for v, lab in enumerate(tets[j])}
                images = [0] * 4
                for v in range(4):
                    images[v] = g if v == f else pos[tets[i][v]]
                p = Perm4(tuple(images))
                gluings[i][f] = (j, p)
                gluings[j][g] = (i, p.inverse())
        return cls(len(tets), gluings)


def serialize_triangulation(tri: Triangulation) -> str:
    lines = [f"tri {tri.tet_count}"]
    for row in tri.gluings:
        lines.append(" ".join("-" if g is None else f"{g[0]}:{g[1]}" for g in row))
    return "\n".join(lines) + "\n"


def parse_triangulation(text) -> Triangulation:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    lines = [(n, ln.strip()) for n, ln in enumerate(text.splitlines(), start=1)]
    lines = [(n, ln) for n, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise TriangulationFormatError("empty input", 1)
    n0, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "tri" or not parts[1].isdigit():
        raise TriangulationFormatError(f"expected 'tri <count>', got {header!r}", n0)
    count = int(parts[1])
    body = lines[1:]
    if len(body) != count:
        raise TriangulationFormatError(
            f"expected {count} tetrahedron lines, got {len(body)}",
            body[-1][0] if body else n0)
    rows = []
    for idx, (n, ln) in enumerate(body):
        entries = ln.split()
        if len(entries) != 4:
            raise TriangulationFormatError(f"expected 4 face entries, got {len(entries)}", n)
        row = []
        for e in entries:
            if e == "-":
                row.append(None)
                continue
            target, sep, perm = e.partition(":")
            if not sep or not target.isdigit():
                raise TriangulationFormatError(f"malformed entry {e!r}", n)
            try:
                p = Perm4.from_string(perm)
            except ValueError as exc:
                raise TriangulationFormatError(str(exc), n) from None
            if int(target) >= count:
                raise TriangulationFormatError(f"tetrahedron index {target} out of range", n)
            row.append((int(target), p))
        rows.append(row)
    # involution is checked here so the error can carry a line number
    for i, row in enumerate(rows):
        for f, g in enumerate(row):
            if g is None:
                continue
            j, p = g
            b = p(f)
            back = rows[j][b]
            if (j, b) == (i, f) or back is None or back[0] != i or back[1] != p.inverse():
                raise TriangulationFormatError(
                    f"gluing of face ({i},{f}) is not involutive", body[i][0])
    return Triangulation(count, rows)


# -- skeleton ---------------------------------------------------------------


@dataclass
class Skeleton:
    """Vertex, edge and face classes of a triangulation.

    Members are listed in lexicographic order and the first one is the
    class representative. Edge members are ``(tet, (a, b))`` with ``a < b``
    and face members ``(tet, f)``; ``edge_sign``/``face_sign`` give the
    orientation of each member relative to its representative.
    """

    tet_count: int
    vertex_classes: list
    edge_classes: list
    face_classes: list
    vertex_of: dict = field(repr=False)
    edge_of: dict = field(repr=False)
    edge_sign: dict = field(repr=False)
    face_of: dict = field(repr=False)
    face_sign: dict = field(repr=False)
    reversed_edges: list = field(default_factory=list)

    def euler_characteristic(self) -> int:
        return (len(self.vertex_classes) - len(self.edge_classes)
                + len(self.face_classes) - self.tet_count)


def _face_rel(f, p, g) -> int:
    """Orientation sign of the gluing of face f onto face g via p."""
    image = [p(v) for v in face_vertices(f)]
    return permutation_sign(image)


def compute_skeleton(tri: Triangulation) -> Skeleton:
    t = tri.tet_count
    verts = UnionFind((i, v) for i in range(t) for v in range(4))
    edges = SignedUnionFind((i, e) for i in range(t) for e in combinations(range(4), 2))
    faces = SignedUnionFind((i, f) for i in range(t) for f in range(4))
    for i, row in enumerate(tri.gluings):
        for f, g in enumerate(row):
            if g is None:
                continue
            j, p = g
            for v in face_vertices(f):
                verts.union((i, v), (j, p(v)))
            for a, b in combinations(face_vertices(f), 2):
                pa, pb = p(a), p(b)
                rel = 1 if pa < pb else -1
                edges.union((i, (a, b)), (j, (min(pa, pb), max(pa, pb))), rel)
            faces.union((i, f), (j, p(f)), _face_rel(f, p, p(f)))

    vertex_classes = verts.groups()
    vertex_of = {m: k for k, c in enumerate(vertex_classes) for m in c}
    edge_classes = edges.groups()
    edge_of, edge_sign = {}, {}
    reversed_edges = []
    for k, c in enumerate(edge_classes):
        if not edges.consistent(c[0]):
            reversed_edges.append(k)
        _, s0 = edges.find(c[0])
        for m in c:
            edge_of[m] = k
            edge_sign[m] = edges.find(m)[1] * s0
    face_classes = faces.groups()
    face_of, face_sign = {}, {}
    for k, c in enumerate(face_classes):
        _, s0 = faces.find(c[0])
        for m in c:
            face_of[m] = k
            face_sign[m] = faces.find(m)[1] * s0
    return Skeleton(t, vertex_classes, edge_classes, face_classes, vertex_of,
                    edge_of, edge_sign, face_of, face_sign, reversed_edges)


# -- validity ---------------------------------------------------------------


@dataclass(frozen=True)
class ManifoldReport:
    is_closed: bool
    is_manifold: bool
    reversed_edges: tuple = ()
    bad_vertices: tuple = ()   # (vertex class, euler characteristic, boundary circles)
    boundary_faces: tuple = ()


def vertex_link(tri: Triangulation, vertex_class: int) -> SurfaceTriangulation:
    """Triangulated link of a vertex class, one triangle per corner.

    The link triangle of corner ``(i, v)`` has its vertices on the edges
    ``(v, w)`` for the other three vertices ``w`` in increasing order, so
    its edge ``k`` lies on the face of ``i`` opposite the ``k``-th such ``w``.
    """
    corners = tri.skeleton.vertex_classes[vertex_class]
    index = {c: n for n, c in enumerate(corners)}
    others = {v: face_vertices(v) for v in range(4)}
    gluings = [[None] * 3 for _ in corners]
    for n, (i, v) in enumerate(corners):
        for k, w in enumerate(others[v]):
            g = tri.gluings[i][w]
            if g is None:
                continue
            j, p = g
            pv = p(v)
            tgt = others[pv]
            l = tgt.index(p(w))
            a, b = (others[v][x] for x in EDGE_ENDS[k])
            c, _ = (tgt[x] for x in EDGE_ENDS[l])
            gluings[n][k] = (index[(j, pv)], l, p(a) != c)
    return SurfaceTriangulation(len(corners), tuple(tuple(g) for g in gluings))


def check_closed_3_manifold(tri: Triangulation) -> ManifoldReport:
    """Closedness plus vertex-link and edge-reversal checks.

    Interior vertex links must be spheres; on a triangulation with boundary,
    links of boundary vertices must be discs.
    """
    sk = tri.skeleton
    bad = []
    for k in range(len(sk.vertex_classes)):
        link = vertex_link(tri, k)
        chi = link.euler_characteristic()
        nb = link.boundary_component_count()
        components = len(link.connected_components())
        ok = components == 1 and link.is_valid_surface() and (
            (nb == 0 and chi == 2) or (nb == 1 and chi == 1))
        if not ok:
            bad.append((k, chi, nb))
    return ManifoldReport(
        is_closed=tri.is_closed,
        is_manifold=not bad and not sk.reversed_edges,
        reversed_edges=tuple(sk.reversed_edges),
        bad_vertices=tuple(bad),
        boundary_faces=tuple(tri.boundary_faces()),
    )


def tetrahedron_orientation(tri: Triangulation):
    """Return ``(signs, orientable)``; consistent signs make every gluing odd."""
    suf = SignedUnionFind(range(tri.tet_count))
    for i, row in enumerate(tri.gluings):
        for g in row:
            if g is not None:
                j, p = g
                suf.union(i, j, -p.sign())
    signs = [suf.find(i)[1] for i in range(tri.tet_count)]
    return signs, all(suf.consistent(i) for i in range(tri.tet_count))


def is_orientable(tri: Triangulation) -> bool:
    if not tri.is_closed:
        raise ValueError("orientability is only decided for closed triangulations")
    return tetrahedron_orientation(tri)[1]


def double(tri: Triangulation) -> Triangulation:
    """Two copies glued along their boundary faces by the identity."""
    if tri.is_closed:
        raise ValueError("cannot double a closed triangulation")
    t = tri.tet_count
    ident = Perm4.identity()
    rows = []
    for copy in range(2):
        for i, row in enumerate(tri.gluings):
            out = []
            for f, g in enumerate(row):
                if g is None:
                    out.append((i + (1 - copy) * t, ident))
                else:
                    out.append((g[0] + copy * t, g[1]))
            rows.append(out)
    return Triangulation(2 * t, rows)


def disjoint_union(*tris: Triangulation) -> Triangulation:
    rows, offset = [], 0
    for tri in tris:
        for row in tri.gluings:
            rows.append([None if g is None else (g[0] + offset, g[1]) for g in row])
        offset += tri.tet_count
    return Triangulation(offset, rows)
