"""Permutations of the four vertices of a tetrahedron."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


@dataclass(frozen=True)
class Perm4:
    """A bijection of {0, 1, 2, 3}; ``p(i) == p.images[i]``."""

    images: tuple[int, int, int, int]

    def __post_init__(self):
        if sorted(self.images) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {self.images!r}")
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))

    @classmethod
    def identity(cls) -> Perm4:
        return cls((0, 1, 2, 3))

    @classmethod
    def from_string(cls, s: str) -> Perm4:
        if len(s) != 4 or not s.isdigit():
            raise ValueError(f"bad permutation string {s!r}")
        return cls(tuple(int(c) for c in s))

    @classmethod
    def all(cls) -> list[Perm4]:
        return [cls(p) for p in permutations(range(4))]

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: Perm4) -> Perm4:
        # (p * q)(i) == p(q(i))
        return Perm4(tuple(self.images[other.images[i]] for i in range(4)))

    def inverse(self) -> Perm4:
        inv = [0] * 4
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm4(tuple(inv))

    def sign(self) -> int:
        return permutation_sign(self.images)

    def __str__(self) -> str:
        return "".join(str(i) for i in self.images)


def permutation_sign(seq) -> int:
    """Sign of the permutation that sorts ``seq`` (entries must be distinct)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign
