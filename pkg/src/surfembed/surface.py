"""Triangulated surfaces (possibly with boundary) and their classification.

Triangle vertices are numbered 0, 1, 2 and edge ``k`` is the edge opposite
vertex ``k``. A gluing of edge ``k`` of triangle ``t`` is recorded as
``(target_triangle, target_edge, reversed)``; ``reversed`` is False when the
lower-numbered endpoint of the source edge maps to the lower-numbered
endpoint of the target edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .unionfind import SignedUnionFind, UnionFind

EDGE_ENDS = ((1, 2), (0, 2), (0, 1))
# +1 if traversing the triangle boundary 0 -> 1 -> 2 -> 0 runs along the edge
# from its lower to its higher endpoint
EDGE_DIRECTION = (1, -1, 1)


@dataclass(frozen=True)
class SurfaceClass:
    euler_characteristic: int
    orientable: bool
    boundary_components: int
    connected_components: int

    @property
    def euler_genus(self) -> int:
        """Euler genus of a connected surface (boundary circles capped off)."""
        return 2 - self.euler_characteristic - self.boundary_components


@dataclass(frozen=True, eq=False)
class SurfaceTriangulation:
    triangle_count: int
    gluings: tuple
    boundary_labels: dict = field(default_factory=dict)

    def __post_init__(self):
        gl = tuple(tuple(g) for g in self.gluings)
        object.__setattr__(self, "gluings", gl)
        if len(gl) != self.triangle_count or any(len(g) != 3 for g in gl):
            raise ValueError("need three edge entries per triangle")
        for t, row in enumerate(gl):
            for k, g in enumerate(row):
                if g is None:
                    continue
                u, l, rev = g
                if not (0 <= u < self.triangle_count and 0 <= l < 3):
                    raise ValueError(f"edge ({t},{k}) glued out of range")
                if (u, l) == (t, k):
                    raise ValueError(f"edge ({t},{k}) glued to itself")
                if gl[u][l] != (t, k, rev):
                    raise ValueError(f"gluing of edge ({t},{k}) is not involutive")

    def __eq__(self, other):
        return (isinstance(other, SurfaceTriangulation)
                and self.triangle_count == other.triangle_count
                and self.gluings == other.gluings)

    def __hash__(self):
        return hash((self.triangle_count, self.gluings))

    @classmethod
    def from_triangles(cls, triangles, boundary_labels=None) -> SurfaceTriangulation:
        """Glue triangles given as vertex-label triples along shared edges."""
        triangles = [tuple(t) for t in triangles]
        sites = {}
        for t, tri in enumerate(triangles):
            if len(set(tri)) != 3:
                raise ValueError(f"degenerate triangle {tri!r}")
            for k in range(3):
                a, b = EDGE_ENDS[k]
                sites.setdefault(frozenset((tri[a], tri[b])), []).append((t, k))
        gluings = [[None] * 3 for _ in triangles]
        for key, where in sites.items():
            if len(where) > 2:
                raise ValueError(f"edge {sorted(key)!r} lies in {len(where)} triangles")
            if len(where) == 2:
                (t, k), (u, l) = where
                a, b = EDGE_ENDS[k]
                c, _ = EDGE_ENDS[l]
                rev = triangles[t][a] != triangles[u][c]
                gluings[t][k] = (u, l, rev)
                gluings[u][l] = (t, k, rev)
        return cls(len(triangles), tuple(tuple(g) for g in gluings),
                   dict(boundary_labels or {}))

    # -- skeleton ---------------------------------------------------------

    @cached_property
    def _vertex_uf(self) -> UnionFind:
        uf = UnionFind((t, v) for t in range(self.triangle_count) for v in range(3))
        for t, row in enumerate(self.gluings):
            for k, g in enumerate(row):
                if g is None:
                    continue
                u, l, rev = g
                a, b = EDGE_ENDS[k]
                c, d = EDGE_ENDS[l]
                if rev:
                    c, d = d, c
                uf.union((t, a), (u, c))
                uf.union((t, b), (u, d))
        return uf

    @cached_property
    def vertex_classes(self) -> list[list]:
        return self._vertex_uf.groups()

    @cached_property
    def vertex_index(self) -> dict:
        return {m: i for i, cls_ in enumerate(self.vertex_classes) for m in cls_}

    @cached_property
    def edge_classes(self) -> list[list]:
        seen = set()
        out = []
        for t, row in enumerate(self.gluings):
            for k, g in enumerate(row):
                if (t, k) in seen:
                    continue
                members = [(t, k)]
                seen.add((t, k))
                if g is not None:
                    members.append((g[0], g[1]))
                    seen.add((g[0], g[1]))
                out.append(sorted(members))
        return sorted(out)

    def boundary_edges(self) -> list[tuple[int, int]]:
        return [(t, k) for t, row in enumerate(self.gluings)
                for k, g in enumerate(row) if g is None]

    @property
    def is_closed(self) -> bool:
        return not self.boundary_edges()

    def euler_characteristic(self) -> int:
        return len(self.vertex_classes) - len(self.edge_classes) + self.triangle_count

    def connected_components(self) -> list[list[int]]:
        uf = UnionFind(range(self.triangle_count))
        for t, row in enumerate(self.gluings):
            for g in row:
                if g is not None:
                    uf.union(t, g[0])
        return uf.groups()

    def boundary_component_count(self) -> int:
        uf = UnionFind()
        for t, k in self.boundary_edges():
            a, b = EDGE_ENDS[k]
            va = self.vertex_index[(t, a)]
            vb = self.vertex_index[(t, b)]
            uf.add(va)
            uf.add(vb)
            uf.union(va, vb)
        return len(uf.groups())

    def orientation(self):
        """Transport an orientation across edges.

        Returns ``(signs, orientable)`` with one sign per triangle; signs are
        only meaningful when ``orientable`` is True.
        """
        suf = SignedUnionFind(range(self.triangle_count))
        for t, row in enumerate(self.gluings):
            for k, g in enumerate(row):
                if g is None:
                    continue
                u, l, rev = g
                # consistent neighbours traverse the shared edge in opposite
                # directions
                rel = -EDGE_DIRECTION[k] * EDGE_DIRECTION[l] * (-1 if rev else 1)
                suf.union(t, u, rel)
        signs = [suf.find(t)[1] for t in range(self.triangle_count)]
        ok = all(suf.consistent(t) for t in range(self.triangle_count))
        return signs, ok

    def is_orientable(self) -> bool:
        return self.orientation()[1]

    def is_valid_surface(self) -> bool:
        """Every vertex has a disc or half-disc neighbourhood."""
        return all(self._vertex_link_ok(c) for c in self.vertex_classes)

    def _vertex_link_ok(self, corners_of_vertex) -> bool:
        # corners around the vertex, joined through glued edges at it, must
        # form a single path or cycle
        corner_set = set(corners_of_vertex)
        adj = {c: [] for c in corner_set}
        for (t, v) in corner_set:
            for k in range(3):
                if k == v:
                    continue
                g = self.gluings[t][k]
                if g is None:
                    continue
                u, l, rev = g
                a, b = EDGE_ENDS[k]
                c, d = EDGE_ENDS[l]
                if rev:
                    c, d = d, c
                img = c if a == v else d
                adj[(t, v)].append((u, img))
        start = next(iter(corner_set))
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != corner_set:
            return False
        ends = sum(1 for c in corner_set if len(adj[c]) < 2)
        return ends in (0, 2) or (ends == 1 and len(corner_set) == 1)

    def classify(self) -> SurfaceClass:
        return SurfaceClass(
            euler_characteristic=self.euler_characteristic(),
            orientable=self.is_orientable(),
            boundary_components=self.boundary_component_count(),
            connected_components=len(self.connected_components()),
        )
