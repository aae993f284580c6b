"""Upper half-plane geometry seen from the boundary.

Everything here is decided on R u {oo}: cyclic order of boundary points,
geodesics as ordered endpoint pairs, and Euclidean circles centred on the
real axis (the closures of bounded geodesics).
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._tol import resolve
from .boundary import INF, BoundaryPoint, as_point, chordal, cross, same_point
from .errors import (
    DegenerateArc,
    DegenerateAxis,
    ImageThroughInfinity,
    InfinityFixed,
    NonPositiveLength,
    NotHyperbolic,
    PoleOnCircle,
    SharedEndpoint,
    VerticalAxis,
)
from .moebius import (
    MoebiusMap,
    apply_boundary,
    compose_all,
    fixed_points,
    inverse,
    is_hyperbolic,
    normalize,
)

__all__ = [
    "BoundaryPoint", "INF", "Geodesic", "CircleOnAxis", "cyclic_order",
    "pairs_linked", "point_in_arc", "axis", "build_hyperbolic",
    "isometric_circles", "image_circle", "geodesic_through", "arc_point",
    "arc_midpoint", "frame_to_infinity",
]


@dataclass(frozen=True, slots=True)
class Geodesic:
    """Oriented geodesic from ``p`` to ``q`` (repelling to attracting for axes)."""

    p: BoundaryPoint
    q: BoundaryPoint

    def __post_init__(self):
        if chordal(self.p, self.q) <= resolve(None):
            raise DegenerateAxis("geodesic endpoints coincide")

    @property
    def endpoints(self):
        return (self.p, self.q)

    def reversed(self) -> Geodesic:
        return Geodesic(self.q, self.p)


@dataclass(frozen=True, slots=True)
class CircleOnAxis:
    center: float
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.center) and math.isfinite(self.radius)):
            raise ValueError("circle must be bounded")
        if not self.radius > 0.0:
            raise ValueError(f"radius {self.radius!r} is not positive")

    @classmethod
    def from_feet(cls, u: float, v: float) -> CircleOnAxis:
        if math.isinf(u) or math.isinf(v):
            raise ImageThroughInfinity("a foot is at infinity")
        lo, hi = min(u, v), max(u, v)
        return cls(0.5 * (lo + hi), 0.5 * (hi - lo))

    @property
    def left(self) -> float:
        return self.center - self.radius

    @property
    def right(self) -> float:
        return self.center + self.radius

    @property
    def feet(self) -> tuple[float, float]:
        return (self.left, self.right)

    def contains(self, z: float) -> bool:
        """Strict interior test for a real point (``inf`` is never inside)."""
        return abs(z - self.center) < self.radius

    def isclose(self, other: CircleOnAxis, tol=None) -> bool:
        return feet_distance(self, other) <= resolve(tol)


def feet_distance(C: CircleOnAxis, D: CircleOnAxis) -> float:
    """Largest chordal distance between corresponding feet."""
    return max(
        chordal(BoundaryPoint.from_real(C.left), BoundaryPoint.from_real(D.left)),
        chordal(BoundaryPoint.from_real(C.right), BoundaryPoint.from_real(D.right)),
    )


def cyclic_order(p, q, r, tol=None) -> int:
    """+1 if p, q, r run in the positive direction of R u {oo}, -1 if
    negative, 0 if two of them coincide."""
    p, q, r = as_point(p), as_point(q), as_point(r)
    tol = resolve(tol)
    s1, s2, s3 = cross(p, q), cross(q, r), cross(r, p)
    if min(abs(s1), abs(s2), abs(s3)) <= tol:
        return 0
    # each point's sign ambiguity enters two factors and cancels
    return 1 if s1 * s2 * s3 > 0 else -1


def pairs_linked(pair1, pair2, tol=None) -> bool:
    """True iff the endpoint pairs interleave, i.e. the geodesics cross."""
    p1, q1 = (as_point(x) for x in pair1)
    u, v = (as_point(x) for x in pair2)
    pts = [p1, q1, u, v]
    tol = resolve(tol)
    for i in range(4):
        for j in range(i + 1, 4):
            if chordal(pts[i], pts[j]) <= tol:
                raise SharedEndpoint("endpoint pairs share a point")
    return cyclic_order(p1, u, q1, tol) != cyclic_order(p1, v, q1, tol)


def point_in_arc(p, u, v, w, tol=None) -> bool:
    """Is ``p`` in the open arc from ``u`` to ``v`` that avoids ``w``?"""
    p, u, v, w = (as_point(x) for x in (p, u, v, w))
    tol = resolve(tol)
    if chordal(u, v) <= tol or chordal(u, w) <= tol or chordal(v, w) <= tol:
        raise DegenerateArc("arc endpoints and reference point must be distinct")
    if chordal(p, u) <= tol or chordal(p, v) <= tol:
        return False
    return cyclic_order(u, p, v, tol) != cyclic_order(u, w, v, tol)


def arc_point(u, v, w, fraction: float) -> BoundaryPoint:
    """Point a given fraction of the way from ``u`` to ``v`` (angle
    parameter) along the arc avoiding ``w``."""
    u, v, w = as_point(u), as_point(v), as_point(w)
    tu, tv = u.angle(), v.angle()
    span = (tv - tu) % (2.0 * math.pi)
    mid = BoundaryPoint.from_angle(tu + 0.5 * span)
    if not point_in_arc(mid, u, v, w, tol=0.0):
        span -= 2.0 * math.pi
    return BoundaryPoint.from_angle(tu + fraction * span)


def arc_midpoint(u, v, w) -> BoundaryPoint:
    return arc_point(u, v, w, 0.5)


def axis(T: MoebiusMap, tol=None) -> Geodesic:
    attracting, repelling = fixed_points(T, tol)
    return Geodesic(repelling, attracting)


def frame_to_infinity(p) -> MoebiusMap:
    """A fixed orientation-preserving map sending ``p`` to infinity."""
    p = as_point(p)
    if p.is_infinite:
        return MoebiusMap(1.0, 0.0, 0.0, 1.0)
    # z -> -y / (y z - x) in projective form
    return normalize((0.0, -1.0, p.y, -p.x))


def build_hyperbolic(p, q, t: float, tol=None) -> MoebiusMap:
    """Hyperbolic map with repelling point ``p``, attracting point ``q`` and
    translation length ``t``."""
    p, q = as_point(p), as_point(q)
    if chordal(p, q) <= resolve(tol):
        raise DegenerateAxis("repelling and attracting points coincide")
    if not t > 0:
        raise NonPositiveLength(f"translation length {t!r}")
    # M sends 0 -> p (second column) and oo -> q (first column)
    qx, qy, px, py = q.x, q.y, p.x, p.y
    if qx * py - px * qy < 0:
        px, py = -px, -py
    M = normalize((qx, px, qy, py), tol=0.0)
    lam = math.exp(0.5 * t)
    D = MoebiusMap(lam, 0.0, 0.0, 1.0 / lam)
    return compose_all(M, D, inverse(M), tol=tol)


def isometric_circles(T: MoebiusMap, tol=None) -> tuple[CircleOnAxis, CircleOnAxis]:
    """(I(T), I(T^-1)): T sends the exterior of the first onto the interior
    of the second."""
    tol = resolve(tol)
    if not is_hyperbolic(T, tol):
        raise NotHyperbolic(f"{T!r} is not hyperbolic")
    if abs(T.c) <= tol:
        raise InfinityFixed("c = 0: infinity is fixed")
    r = 1.0 / abs(T.c)
    return CircleOnAxis(-T.d / T.c, r), CircleOnAxis(T.a / T.c, r)


def image_circle(T: MoebiusMap, C: CircleOnAxis, tol=None) -> CircleOnAxis:
    """Image of ``C`` under ``T``, found from the images of its feet."""
    tol = resolve(tol)
    if abs(T.c) > tol:
        pole = BoundaryPoint.from_real(-T.d / T.c)
        for foot in C.feet:
            if same_point(pole, BoundaryPoint.from_real(foot), tol):
                raise ImageThroughInfinity("a foot maps to infinity")
    u = apply_boundary(T, BoundaryPoint.from_real(C.left))
    v = apply_boundary(T, BoundaryPoint.from_real(C.right))
    if u.is_infinite or v.is_infinite:
        raise PoleOnCircle("image is unbounded")
    return CircleOnAxis.from_feet(u.to_real(), v.to_real())


def geodesic_through(phi: float, tol=None) -> Geodesic:
    """Geodesic through i with endpoints tan(phi) and -cot(phi)."""
    if not 0.0 < phi < math.pi:
        raise ValueError("phi must lie in (0, pi)")
    if abs(phi - 0.5 * math.pi) <= resolve(tol):
        raise VerticalAxis("phi = pi/2 puts an endpoint at infinity")
    return Geodesic(BoundaryPoint.from_real(math.tan(phi)),
                    BoundaryPoint.from_real(-1.0 / math.tan(phi)))
