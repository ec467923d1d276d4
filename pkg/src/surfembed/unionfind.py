"""Union-find over hashable keys, optionally tracking a relative sign."""
from __future__ import annotations


class UnionFind:
    def __init__(self, items=()):
        self._parent = {}
        for x in items:
            self._parent[x] = x

    def add(self, x):
        self._parent.setdefault(x, x)

    def find(self, x):
        parent = self._parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # keep the smaller key as root so representatives are canonical
        if rb < ra:
            ra, rb = rb, ra
        self._parent[rb] = ra
        return True

    def groups(self) -> list[list]:
        out = {}
        for x in self._parent:
            out.setdefault(self.find(x), []).append(x)
        return sorted(sorted(g) for g in out.values())


class SignedUnionFind:
    """Union-find where every element carries a sign relative to its root.

    ``union(a, b, rel)`` records ``sign(a) * sign(b) == rel``. A union that
    contradicts earlier information marks the whole class inconsistent.
    """

    def __init__(self, items=()):
        self._parent = {}
        self._sign = {}
        self._bad = set()
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._sign[x] = 1

    def find(self, x):
        """Return ``(root, sign of x relative to root)``."""
        path = []
        while self._parent[x] != x:
            path.append(x)
            x = self._parent[x]
        root = x
        # compress, accumulating signs from the top of the path down
        acc = 1
        for y in reversed(path):
            acc *= self._sign[y]
            self._parent[y] = root
            self._sign[y] = acc
        return root, (self._sign[path[0]] if path else 1)

    def union(self, a, b, rel: int):
        ra, sa = self.find(a)
        rb, sb = self.find(b)
        if ra == rb:
            if sa * sb != rel:
                self._bad.add(ra)
            return
        if rb < ra:
            ra, rb, sa, sb = rb, ra, sb, sa
        self._parent[rb] = ra
        self._sign[rb] = sa * sb * rel
        if rb in self._bad:
            self._bad.discard(rb)
            self._bad.add(ra)

    def consistent(self, x) -> bool:
        return self.find(x)[0] not in self._bad

    def groups(self) -> list[list]:
        out = {}
        for x in self._parent:
            out.setdefault(self.find(x)[0], []).append(x)
        return sorted(sorted(g) for g in out.values())
