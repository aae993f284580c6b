"""Points of the boundary circle R u {oo} as normalized projective pairs."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._tol import resolve


@dataclass(frozen=True, slots=True)
class BoundaryPoint:
    """The projective point (x : y) with y >= 0 and x^2 + y^2 = 1.

    Infinity is (1 : 0).  The real number r corresponds to (r : 1) rescaled.
    """

    x: float
    y: float

    @classmethod
    def from_pair(cls, x: float, y: float) -> BoundaryPoint:
        norm = math.hypot(x, y)
        if norm == 0.0 or not math.isfinite(norm):
            raise ValueError(f"not a projective point: ({x}, {y})")
        x, y = x / norm, y / norm
        if y < 0.0 or (y == 0.0 and x < 0.0):
            x, y = -x, -y
        return cls(x + 0.0, y + 0.0)

    @classmethod
    def from_real(cls, r: float) -> BoundaryPoint:
        if math.isinf(r):
            return INF
        return cls.from_pair(r, 1.0)

    @property
    def is_infinite(self) -> bool:
        return self.y == 0.0

    def to_real(self) -> float:
        """Affine coordinate; ``math.inf`` for the point at infinity."""
        if self.y == 0.0:
            return math.inf
        return self.x / self.y

    def angle(self) -> float:
        """Position on the circle in [0, 2pi); decreases as the real coordinate increases."""
        return (2.0 * math.atan2(self.y, self.x)) % (2.0 * math.pi)

    @classmethod
    def from_angle(cls, theta: float) -> BoundaryPoint:
        half = 0.5 * (theta % (2.0 * math.pi))
        return cls.from_pair(math.cos(half), math.sin(half))

    def __float__(self) -> float:
        return self.to_real()

    def __repr__(self) -> str:
        return f"BoundaryPoint({self.to_real()!r})"


INF = BoundaryPoint(1.0, 0.0)


def as_point(p) -> BoundaryPoint:
    """Coerce a real number, ``"inf"``, or a BoundaryPoint."""
    if isinstance(p, BoundaryPoint):
        return p
    if isinstance(p, str):
        if p.strip().lower() in ("inf", "infinity", "oo", "+inf", "-inf"):
            return INF
        return BoundaryPoint.from_real(float(p))
    return BoundaryPoint.from_real(float(p))


def cross(p: BoundaryPoint, q: BoundaryPoint) -> float:
    return p.x * q.y - q.x * p.y


def chordal(p: BoundaryPoint, q: BoundaryPoint) -> float:
    """Chordal distance on the projective circle (sine of the angle between the lines)."""
    return abs(cross(p, q))


def same_point(p: BoundaryPoint, q: BoundaryPoint, tol=None) -> bool:
    return chordal(p, q) <= resolve(tol)
