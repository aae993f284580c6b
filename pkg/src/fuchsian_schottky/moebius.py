"""Real Moebius transformations: normalization, products, classification,
fixed points and translation lengths.

A :class:`MoebiusMap` is an element of PSL(2, R) stored as a determinant-one
matrix with a canonical sign, so that two maps can be compared entrywise.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ._tol import resolve
from .boundary import BoundaryPoint
from .errors import MarginalTrace, NonOrientable, NotHyperbolic


class Kind(enum.Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"

    def __str__(self):
        return self.value


def _canonical_sign(a, b, c, d, tol):
    tr = a + d
    if tr > tol:
        return a, b, c, d
    if tr < -tol:
        return -a, -b, -c, -d
    for e in (a, b, c):
        if abs(e) > tol:
            if e < 0:
                return -a, -b, -c, -d
            return a, b, c, d
    return a, b, c, d


@dataclass(frozen=True, eq=False, slots=True)
class MoebiusMap:
    """z -> (a z + b) / (c z + d) with ad - bc = 1 and canonical sign.

    Build instances with :func:`normalize` (or :meth:`from_matrix`); the
    constructor trusts its input.
    """

    a: float
    b: float
    c: float
    d: float

    @classmethod
    def from_matrix(cls, m, tol=None) -> MoebiusMap:
        return normalize(m, tol=tol)

    @property
    def entries(self):
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> float:
        """Unsigned trace |a + d|."""
        return abs(self.a + self.d)

    @property
    def det(self) -> float:
        return self.a * self.d - self.b * self.c

    def as_matrix(self):
        return [[self.a, self.b], [self.c, self.d]]

    def isclose(self, other: MoebiusMap, tol=None) -> bool:
        tol = resolve(tol)
        if all(abs(x - y) <= tol * max(1.0, abs(x), abs(y))
               for x, y in zip(self.entries, other.entries)):
            return True
        # the sign rule is discontinuous at trace 0; accept the other representative there
        if abs(self.a + self.d) <= tol and abs(other.a + other.d) <= tol:
            return all(abs(x + y) <= tol * max(1.0, abs(x), abs(y))
                       for x, y in zip(self.entries, other.entries))
        return False

    def __eq__(self, other):
        if not isinstance(other, MoebiusMap):
            return NotImplemented
        return self.isclose(other)

    __hash__ = None

    def key(self, digits: int = 7):
        """Hashable rounded form, for duplicate detection."""
        return tuple(round(e, digits) + 0.0 for e in self.entries)

    def __matmul__(self, other: MoebiusMap) -> MoebiusMap:
        return compose(self, other)

    def __invert__(self) -> MoebiusMap:
        return inverse(self)

    def __call__(self, p):
        if isinstance(p, BoundaryPoint):
            return apply_boundary(self, p)
        return apply_real(self, p)

    def __repr__(self):
        return f"MoebiusMap({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"


def normalize(raw, tol=None) -> MoebiusMap:
    """Scale a 2x2 real matrix to determinant one and fix its sign.

    ``raw`` may be nested ``[[a, b], [c, d]]``, a flat ``(a, b, c, d)`` or a
    mapping with keys ``a, b, c, d``.
    """
    tol = resolve(tol)
    if isinstance(raw, MoebiusMap):
        a, b, c, d = raw.entries
    elif isinstance(raw, dict):
        a, b, c, d = (float(raw[k]) for k in "abcd")
    else:
        try:
            (a, b), (c, d) = raw
        except (TypeError, ValueError):
            a, b, c, d = raw
        a, b, c, d = float(a), float(b), float(c), float(d)
    det = a * d - b * c
    if not det > tol:
        raise NonOrientable(f"determinant {det!r} is not positive")
    s = 1.0 / math.sqrt(det)
    return MoebiusMap(*_canonical_sign(a * s, b * s, c * s, d * s, tol))


def _from_product(a, b, c, d, tol) -> MoebiusMap:
    # Products of det-1 matrices have det 1 up to rounding.  Rescale only
    # while ad - bc is computed accurately; for large entries it is mostly
    # rounding noise and dividing by it would spoil the product.
    cond = abs(a * d) + abs(b * c)
    if cond <= _RESCALE_LIMIT:
        det = a * d - b * c
        if det <= 0.0:
            raise NonOrientable(f"determinant {det!r} after product")
        s = 1.0 / math.sqrt(det)
        a, b, c, d = a * s, b * s, c * s, d * s
    return MoebiusMap(*_canonical_sign(a, b, c, d, tol))


_RESCALE_LIMIT = 1e4


IDENTITY = MoebiusMap(1.0, 0.0, 0.0, 1.0)


def identity() -> MoebiusMap:
    return IDENTITY


def matmul(m, n):
    """Raw product of two entry 4-tuples (no renormalization, no sign rule)."""
    a, b, c, d = m
    e, f, g, h = n
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def adjugate(m):
    a, b, c, d = m
    return (d, -b, -c, a)


def compose(S: MoebiusMap, T: MoebiusMap, tol=None) -> MoebiusMap:
    """The map z -> S(T(z))."""
    return _from_product(*matmul(S.entries, T.entries), resolve(tol))


def compose_all(*maps: MoebiusMap, tol=None) -> MoebiusMap:
    out = (1.0, 0.0, 0.0, 1.0)
    for m in maps:
        out = matmul(out, m.entries)
    return _from_product(*out, resolve(tol))


def inverse(T: MoebiusMap, tol=None) -> MoebiusMap:
    return MoebiusMap(*_canonical_sign(T.d, -T.b, -T.c, T.a, resolve(tol)))


def conjugate(G: MoebiusMap, T: MoebiusMap, tol=None) -> MoebiusMap:
    """G T G^-1."""
    return compose_all(G, T, inverse(G), tol=tol)


def apply_boundary(T: MoebiusMap, p: BoundaryPoint) -> BoundaryPoint:
    return BoundaryPoint.from_pair(T.a * p.x + T.b * p.y, T.c * p.x + T.d * p.y)


def apply_real(T: MoebiusMap, z: float) -> float:
    """Affine action on a real number or ``inf``; returns ``inf`` at the pole."""
    return apply_boundary(T, BoundaryPoint.from_real(z)).to_real()


def signed_commutator_trace(A, B) -> float:
    """Trace of A B A^-1 B^-1 computed from raw entries.

    Each factor appears together with its inverse, so the result does not
    depend on the sign representatives of ``A`` and ``B``.  Accepts
    MoebiusMap instances or raw 4-tuples of determinant one.
    """
    m = A.entries if isinstance(A, MoebiusMap) else tuple(A)
    n = B.entries if isinstance(B, MoebiusMap) else tuple(B)
    p = matmul(matmul(m, n), matmul(adjugate(m), adjugate(n)))
    return p[0] + p[3]


def is_identity(T: MoebiusMap, tol=None) -> bool:
    return T.isclose(IDENTITY, tol)


def classify(T: MoebiusMap, tol=None, strict: bool = False) -> Kind:
    """Identity, hyperbolic (|tr| > 2), parabolic (|tr| = 2) or elliptic.

    Traces within ``tol`` of 2 count as parabolic.  With ``strict=True`` the
    band ``2 - 10 tol <= |tr| <= 2 + 10 tol`` outside the parabolic window is
    refused with :class:`MarginalTrace` instead of being decided.
    """
    tol = resolve(tol)
    if is_identity(T, tol):
        return Kind.IDENTITY
    tr = T.trace
    if abs(tr - 2.0) <= tol:
        return Kind.PARABOLIC
    if strict and abs(tr - 2.0) <= 10 * tol:
        raise MarginalTrace(f"|trace| = {tr!r} too close to 2")
    if tr > 2.0:
        return Kind.HYPERBOLIC
    return Kind.ELLIPTIC


def is_hyperbolic(T: MoebiusMap, tol=None) -> bool:
    return classify(T, tol) is Kind.HYPERBOLIC


def _eigenvector(a, b, c, d, lam) -> BoundaryPoint:
    # (b, lam - a) and (lam - d, c) both span the eigenline; take the better conditioned
    u = (b, lam - a)
    v = (lam - d, c)
    if math.hypot(*u) >= math.hypot(*v):
        return BoundaryPoint.from_pair(*u)
    return BoundaryPoint.from_pair(*v)


def fixed_points(T: MoebiusMap, tol=None) -> tuple[BoundaryPoint, BoundaryPoint]:
    """(attracting, repelling) fixed points of a hyperbolic map.

    The attracting point is the eigenline of the eigenvalue of modulus > 1.
    """
    if not is_hyperbolic(T, tol):
        raise NotHyperbolic(f"{T!r} is {classify(T, tol)}")
    a, b, c, d = T.entries
    tr = a + d
    root = math.sqrt(tr * tr - 4.0)
    big = 0.5 * (tr + math.copysign(root, tr))
    small = 1.0 / big
    return _eigenvector(a, b, c, d, big), _eigenvector(a, b, c, d, small)


def multiplier(T: MoebiusMap, tol=None) -> float:
    """Derivative at the repelling fixed point, e^(translation length) > 1."""
    return math.exp(translation_length(T, tol))


def translation_length(T: MoebiusMap, tol=None) -> float:
    """Hyperbolic translation length 2 arccosh(|tr| / 2)."""
    if not is_hyperbolic(T, tol):
        raise NotHyperbolic(f"{T!r} is {classify(T, tol)}")
    return 2.0 * math.acosh(0.5 * T.trace)


def rotation(theta: float) -> MoebiusMap:
    """Elliptic rotation about i by angle 2 theta; sends cot(theta) to infinity."""
    c, s = math.cos(theta), math.sin(theta)
    return MoebiusMap(*_canonical_sign(c, s, -s, c, resolve(None)))
