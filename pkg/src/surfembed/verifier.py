"""Checking certificates for odd-genus embeddings.

A certificate is a normal coordinate vector together with the genus it is
claimed to realise. Verification is a single reconstruction: no
enumeration is involved.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from enum import Enum

from . import normal
from .triangulation import Triangulation

log = logging.getLogger(__name__)


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class BitBound:
    """Per-coordinate bit budget ``coefficient * t**exponent * (log2 t + 1)``."""
    coefficient: float = 10.0
    exponent: float = 1.0

    def bits_per_coordinate(self, tet_count: int) -> int:
        t = max(tet_count, 1)
        return math.ceil(self.coefficient * t ** self.exponent * (math.log2(t) + 1))

    def total_bits(self, tet_count: int) -> int:
        return 7 * tet_count * self.bits_per_coordinate(tet_count)

    def describe(self) -> str:
        return f"{self.coefficient:g}*t^{self.exponent:g}*(log2 t + 1) bits per coordinate"

    @classmethod
    def parse(cls, spec: str) -> BitBound:
        """Read ``c`` or ``c,k`` (for ``c * t^k * (log2 t + 1)``)."""
        parts = [p.strip() for p in spec.split(",")]
        try:
            values = [float(p) for p in parts]
        except ValueError:
            raise ValueError(f"bad bound spec {spec!r}") from None
        if len(values) == 1:
            return cls(values[0])
        if len(values) == 2:
            return cls(values[0], values[1])
        raise ValueError(f"bad bound spec {spec!r}")


DEFAULT_BOUND = BitBound()


def bit_size_check(coords, tet_count: int, bound: BitBound = DEFAULT_BOUND) -> bool:
    limit = bound.bits_per_coordinate(tet_count)
    log.debug("bit bound %s -> %d bits per coordinate", bound.describe(), limit)
    return all(int(v).bit_length() <= limit for v in coords)


@dataclass(frozen=True)
class Certificate:
    """Coordinates plus the odd genus they claim; ``None`` skips the claim."""
    coords: tuple
    claimed_genus: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(v) for v in self.coords))
        g = self.claimed_genus
        if g is not None and (g < 1 or g % 2 == 0):
            raise PreconditionError("claimed genus must be odd and positive")


class Reason(str, Enum):
    ACCEPTED = "accepted"
    WRONG_LENGTH = "coordinate vector has the wrong length"
    TOO_LARGE = "coordinates exceed the bit bound"
    INADMISSIBLE = "coordinates are not admissible"
    EMPTY = "surface is empty"
    DISCONNECTED = "surface is disconnected"
    ORIENTABLE = "even genus / orientable"
    EVEN_GENUS = "even genus"
    GENUS_MISMATCH = "genus differs from claim"
    GENUS_TOO_LARGE = "genus exceeds query"


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: Reason
    genus: int | None = None

    def as_dict(self) -> dict:
        return {"accepted": self.accepted, "reason": self.reason.value,
                "genus": self.genus}


def verify_certificate(tri: Triangulation, cert: Certificate, query_genus: int,
                       bound: BitBound = DEFAULT_BOUND) -> Verdict:
    if not tri.is_closed:
        raise PreconditionError("triangulation must be closed")
    if query_genus < 1 or query_genus % 2 == 0:
        raise PreconditionError("query genus must be odd and positive")
    x = cert.coords
    if len(x) != 7 * tri.tet_count or any(v < 0 for v in x):
        return Verdict(False, Reason.WRONG_LENGTH)
    if not bit_size_check(x, tri.tet_count, bound):
        return Verdict(False, Reason.TOO_LARGE)
    if not normal.is_admissible(tri, x):
        return Verdict(False, Reason.INADMISSIBLE)
    summary = normal.reconstruct(tri, x)
    if not summary.components:
        return Verdict(False, Reason.EMPTY)
    if len(summary.components) > 1:
        return Verdict(False, Reason.DISCONNECTED)
    comp = summary.components[0]
    g = comp.euler_genus
    if comp.orientable:
        return Verdict(False, Reason.ORIENTABLE, g)
    if g % 2 == 0:
        return Verdict(False, Reason.EVEN_GENUS, g)
    if cert.claimed_genus is not None and g != cert.claimed_genus:
        return Verdict(False, Reason.GENUS_MISMATCH, g)
    if g > query_genus:
        return Verdict(False, Reason.GENUS_TOO_LARGE, g)
    return Verdict(True, Reason.ACCEPTED, g)
