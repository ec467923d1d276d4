"""The SAT-to-3-manifold gadget.

An instance with n variables and m clauses becomes a 2-complex K: a
projective plane P with n + m holes, plus for every variable two punctured
tori F(+i) and F(-i) whose boundary circles are glued to a variable circle
u_i and to the clause circles where that literal occurs. K is thickened to
a 3-manifold N with boundary and N is doubled.

Branching circles are triangulated as 3-cycles. Every piece boundary is a
3-cycle obtained by punching a triangular hole, and the circle inherits the
boundary orientation that P induces on its hole. Other pieces are glued on
with the reversed orientation.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .sat import SatInstance, is_one_in_three, true_literal_counts
from .surface import SurfaceTriangulation
from .triangulation import Triangulation, double

CIRCLE_LENGTH = 3


# -- pieces -------------------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    """A triangulated surface with labelled boundary 3-cycles.

    ``boundary[b]`` lists the local vertex labels of boundary cycle ``b`` in
    the orientation induced by the piece (where that makes sense), and
    ``attachments[b]`` names the branching circle it is glued to.
    """
    name: str
    triangles: tuple
    boundary: tuple
    attachments: tuple
    reversed_gluing: bool

    def surface(self) -> SurfaceTriangulation:
        return SurfaceTriangulation.from_triangles(self.triangles)

    @cached_property
    def boundary_position(self) -> dict:
        return {lab: (b, k) for b, cyc in enumerate(self.boundary)
                for k, lab in enumerate(cyc)}

    def circle_vertex(self, b: int, k: int) -> int:
        """Index on the circle that boundary vertex k of cycle b is glued to."""
        return (-k) % CIRCLE_LENGTH if self.reversed_gluing else k


def _punch(triangles, host, tag):
    """Replace the host triangle (A, B, C) by an annulus around a new 3-cycle.

    Returns the new triangle list and the hole cycle in induced orientation.
    """
    if host not in triangles:
        raise ValueError(f"host triangle {host!r} not found")
    a, b, c = host
    a2, b2, c2 = (("h", tag, 0), ("h", tag, 1), ("h", tag, 2))
    triangles = [t for t in triangles if t != host]
    triangles += [(a, b, b2), (a, b2, a2), (b, c, c2), (b, c2, b2),
                  (c, a, a2), (c, a2, c2)]
    return triangles, (a2, c2, b2)


def projective_plane_with_holes(h: int, name: str = "P", attachments=()) -> Piece:
    """RP^2 minus h open discs: a Moebius grid capped by a cone."""
    width = 3 * h + 3

    def vert(x, y):
        return ("g", 0, 2 - y) if x == width else ("g", x, y)

    tris = []
    for x in range(width):
        for y in range(2):
            a, b = vert(x, y), vert(x + 1, y)
            c, d = vert(x + 1, y + 1), vert(x, y + 1)
            tris += [(a, b, d), (b, c, d)]
    rim = [vert(x, 0) for x in range(width)] + [vert(x, 2) for x in range(width)]
    for k in range(len(rim)):
        tris.append((("z",), rim[k], rim[(k + 1) % len(rim)]))
    holes = []
    for i in range(h):
        x = 1 + 3 * i
        tris, cyc = _punch(tris, (vert(x, 0), vert(x + 1, 0), vert(x, 1)), i)
        holes.append(cyc)
    return Piece(name, tuple(tris), tuple(holes), tuple(attachments), False)


def torus_with_holes(h: int, name: str, attachments=()) -> Piece:
    """An orientable genus-one surface minus h open discs."""
    if h < 1:
        raise ValueError("a torus piece needs at least one hole here")
    lx, ly = 3 * h + 3, 3

    def vert(x, y):
        return ("g", x % lx, y % ly)

    tris = []
    for x in range(lx):
        for y in range(ly):
            a, b = vert(x, y), vert(x + 1, y)
            c, d = vert(x + 1, y + 1), vert(x, y + 1)
            tris += [(a, b, d), (b, c, d)]
    holes = []
    for i in range(h):
        x = 3 * i
        tris, cyc = _punch(tris, (vert(x, 0), vert(x + 1, 0), vert(x, 1)), i)
        holes.append(cyc)
    return Piece(name, tuple(tris), tuple(holes), tuple(attachments), True)


# -- the 2-complex ------------------------------------------------------------


@dataclass(frozen=True)
class BranchingCircle:
    name: str
    pages: tuple  # (piece name, boundary index) in construction order


@dataclass(frozen=True)
class TwoComplex:
    pieces: tuple
    circles: tuple = ()

    @cached_property
    def piece(self) -> dict:
        return {p.name: p for p in self.pieces}

    @cached_property
    def circle(self) -> dict:
        return {c.name: c for c in self.circles}

    def global_label(self, piece: Piece, lab):
        pos = piece.boundary_position.get(lab)
        if pos is None:
            return (piece.name,) + lab
        b, k = pos
        return ("c", piece.attachments[b], piece.circle_vertex(b, k))

    @cached_property
    def triangles(self) -> tuple:
        return tuple(tuple(self.global_label(p, v) for v in t)
                     for p in self.pieces for t in p.triangles)

    @cached_property
    def piece_labels(self) -> tuple:
        return tuple(p.name for p in self.pieces for _ in p.triangles)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)

    def edge_multiplicities(self) -> Counter:
        cnt = Counter()
        for t in self.triangles:
            for i in range(3):
                cnt[frozenset((t[i], t[(i + 1) % 3]))] += 1
        return cnt


def piece_names(var: int) -> tuple[str, str]:
    return f"F+{var}", f"F-{var}"


def build_complex_K(inst: SatInstance) -> TwoComplex:
    n, m = inst.variable_count, inst.clause_count
    u = [f"u{i}" for i in range(1, n + 1)]
    c = [f"c{j}" for j in range(1, m + 1)]
    pieces = [projective_plane_with_holes(n + m, "P", u + c)]
    pages = {name: [("P", b)] for b, name in enumerate(u + c)}
    slots = {}  # (clause, position) -> (piece, boundary index)
    for i in range(1, n + 1):
        for lit, name in zip((i, -i), piece_names(i)):
            occ = [(j, pos) for j, cl in enumerate(inst.clauses)
                   for pos, value in enumerate(cl) if value == lit]
            attach = [u[i - 1]] + [c[j] for j, _ in occ]
            pieces.append(torus_with_holes(len(attach), name, attach))
            pages[u[i - 1]].append((name, 0))
            for b, key in enumerate(occ, start=1):
                slots[key] = (name, b)
    for j in range(m):
        for pos in range(3):
            pages[c[j]].append(slots[(j, pos)])
    circles = tuple(BranchingCircle(name, tuple(pages[name])) for name in u + c)
    return TwoComplex(tuple(pieces), circles)


@dataclass(frozen=True)
class PieceReport:
    name: str
    euler_characteristic: int
    orientable: bool
    boundary_components: int
    connected: bool
    valid_surface: bool


@dataclass(frozen=True)
class ComplexReport:
    pieces: tuple
    circle_page_counts: dict
    ok: bool
    problems: tuple


def check_complex(K: TwoComplex, inst: SatInstance | None = None) -> ComplexReport:
    """Cut K along its branching circles and classify every piece."""
    problems = []
    reports = []
    for p in K.pieces:
        s = p.surface()
        cls = s.classify()
        rep = PieceReport(p.name, cls.euler_characteristic, cls.orientable,
                          cls.boundary_components, cls.connected_components == 1,
                          s.is_valid_surface())
        reports.append(rep)
        if not (rep.connected and rep.valid_surface):
            problems.append(f"{p.name} is not a connected surface")
        if rep.boundary_components != len(p.boundary):
            problems.append(f"{p.name} has {rep.boundary_components} boundary circles, "
                            f"expected {len(p.boundary)}")
        if p.name == "P":
            if rep.orientable or rep.euler_characteristic != 1 - len(p.boundary):
                problems.append("P is not a punctured projective plane")
        elif not rep.orientable or rep.euler_characteristic != -len(p.boundary):
            problems.append(f"{p.name} is not a punctured torus")
    counts = {c.name: len(c.pages) for c in K.circles}
    for name, k in counts.items():
        want = 3 if name.startswith("u") else 4
        if k != want:
            problems.append(f"circle {name} has {k} pages, expected {want}")
    if inst is not None and len(K.pieces) != 2 * inst.variable_count + 1:
        problems.append("wrong number of pieces")
    return ComplexReport(tuple(reports), counts, not problems, tuple(problems))


# -- thickening ---------------------------------------------------------------


class CircleOrderError(ValueError):
    pass


def _prism(bottom, top, key):
    """Three tetrahedra filling a triangular prism.

    The prism is coned from its smallest vertex over the faces missing it;
    every square face ends up split along the diagonal through its own
    smallest vertex, so neighbouring prisms agree.
    """
    verts = list(bottom) + list(top)
    m = min(range(6), key=lambda i: key(verts[i]))
    r = m % 3
    far_end = top if m < 3 else bottom
    s, t = [i for i in range(3) if i != r]
    quad = [bottom[s], bottom[t], top[t], top[s]]
    mu = min(range(4), key=lambda i: key(quad[i]))
    opp = quad[(mu + 2) % 4]
    apex = verts[m]
    return [(apex,) + tuple(far_end),
            (apex, quad[mu], opp, quad[(mu + 1) % 4]),
            (apex, quad[mu], opp, quad[(mu + 3) % 4])]


@dataclass(frozen=True)
class Thickening:
    triangulation: Triangulation
    tet_labels: tuple  # piece or circle name for every tetrahedron


def normalize_circle_orders(K: TwoComplex, circle_orders=None) -> dict:
    orders = {}
    circle_orders = dict(circle_orders or {})
    unknown = set(circle_orders) - set(K.circle)
    if unknown:
        raise CircleOrderError(f"unknown circles {sorted(unknown)}")
    for c in K.circles:
        order = list(circle_orders.get(c.name, range(len(c.pages))))
        if sorted(order) != list(range(len(c.pages))):
            raise CircleOrderError(
                f"order for {c.name} must list each of its {len(c.pages)} pages once")
        orders[c.name] = order
    return orders


def thicken(K: TwoComplex, circle_orders=None) -> Thickening:
    """Product I-bundle over every piece, joined by a solid torus per circle.

    Around a circle with k pages the cross-section is a k-gon; the page in
    position j of the cyclic order is attached along its j-th side, layer 0
    at polygon corner j and layer 1 at corner j + 1.
    """
    orders = normalize_circle_orders(K, circle_orders)
    position = {}
    for c in K.circles:
        if len(c.pages) < 2:
            raise CircleOrderError(f"circle {c.name} has fewer than two pages")
        for j, page in enumerate(orders[c.name]):
            position[c.pages[page]] = (c.name, j, len(c.pages))

    index = {}

    def key(label):
        if label not in index:
            index[label] = len(index)
        return index[label]

    def thick(piece, lab, layer):
        pos = piece.boundary_position.get(lab)
        if pos is None:
            return ("x", piece.name, lab, layer)
        b, k = pos
        circle, j, size = position[(piece.name, b)]
        return ("q", circle, piece.circle_vertex(b, k), (j + layer) % size)

    tets, labels = [], []
    for p in K.pieces:
        for tri in p.triangles:
            bottom = [thick(p, v, 0) for v in tri]
            top = [thick(p, v, 1) for v in tri]
            for lab in bottom + top:
                key(lab)
            for tet in _prism(bottom, top, key):
                tets.append(tet)
                labels.append(p.name)
    for c in K.circles:
        size = len(c.pages)
        for v in range(CIRCLE_LENGTH):
            w = (v + 1) % CIRCLE_LENGTH
            for i in range(1, size - 1):
                bottom = [("q", c.name, v, corner) for corner in (0, i, i + 1)]
                top = [("q", c.name, w, corner) for corner in (0, i, i + 1)]
                for lab in bottom + top:
                    key(lab)
                for tet in _prism(bottom, top, key):
                    tets.append(tet)
                    labels.append(c.name)
    return Thickening(Triangulation.from_tetrahedra(tets), tuple(labels))


def standalone_complex(triangles, name: str = "S") -> TwoComplex:
    """A 2-complex consisting of one closed surface and no branching circles."""
    return TwoComplex((Piece(name, tuple(tuple(t) for t in triangles), (), (), False),))


def build_gadget(inst: SatInstance, circle_orders=None) -> Triangulation:
    K = build_complex_K(inst)
    return double(thicken(K, circle_orders).triangulation)


# -- witness surfaces --------------------------------------------------------


class NotOneInThree(ValueError):
    def __init__(self, clause: int, true_count: int):
        self.clause = clause
        self.true_count = true_count
        super().__init__(f"clause {clause} has {true_count} true literals")


@dataclass(frozen=True)
class AssignmentWitness:
    assignment: tuple
    surface: SurfaceTriangulation = field(repr=False)
    euler_characteristic: int
    orientable: bool
    pieces: tuple

    @property
    def euler_genus(self) -> int:
        return 2 - self.euler_characteristic


def witness_surface(inst: SatInstance, assignment, K: TwoComplex | None = None
                    ) -> AssignmentWitness:
    """P together with the torus piece of every true literal."""
    assignment = tuple(bool(v) for v in assignment)
    counts = true_literal_counts(inst, assignment)
    if not is_one_in_three(inst, assignment):
        j = next(j for j, k in enumerate(counts) if k != 1)
        raise NotOneInThree(j + 1, counts[j])
    K = K or build_complex_K(inst)
    chosen = ["P"] + [piece_names(i + 1)[0 if v else 1] for i, v in enumerate(assignment)]
    tris = [t for t, lab in zip(K.triangles, K.piece_labels) if lab in chosen]
    surf = SurfaceTriangulation.from_triangles(tris)
    if not surf.is_closed or len(surf.connected_components()) != 1:
        raise AssertionError("assembled witness is not a closed connected surface")
    return AssignmentWitness(assignment, surf, surf.euler_characteristic(),
                             surf.is_orientable(), tuple(chosen))


def parse_circle_orders(spec: str) -> dict:
    """Parse ``u1=0,2,1;c1=3,2,1,0`` into a mapping of page orders."""
    orders = {}
    for part in filter(None, (s.strip() for s in spec.split(";"))):
        name, sep, rest = part.partition("=")
        if not sep:
            raise CircleOrderError(f"bad circle order entry {part!r}")
        try:
            orders[name.strip()] = [int(tok) for tok in rest.split(",")]
        except ValueError:
            raise CircleOrderError(f"bad circle order entry {part!r}") from None
    return orders
