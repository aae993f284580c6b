"""Decision procedures for groups generated by two hyperbolic elements.

Intersecting axes: the group is Schottky iff the commutator is hyperbolic,
and then classical on every generating pair.

Disjoint axes: after inverting generators so that the attracting fixed
points are adjacent, the group is classical on (A, B) iff both fixed points
of B^-1 A lie in the arc between the repelling fixed points that avoids the
attracting ones.  When the test passes, :func:`lemma3_build_circles`
produces the circles explicitly.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from ._tol import resolve
from .boundary import BoundaryPoint, same_point
from .errors import (
    ConstructionFailed,
    DegeneratePair,
    NotHyperbolic,
    SharedEndpoint,
    TestElementNotHyperbolic,
    WrongCase,
)
from .geometry import CircleOnAxis, arc_midpoint, arc_point, frame_to_infinity, pairs_linked, point_in_arc
from .moebius import (
    Kind,
    MoebiusMap,
    apply_boundary,
    classify,
    compose,
    compose_all,
    conjugate,
    fixed_points,
    inverse,
    signed_commutator_trace,
)
from .system import SchottkySystem, verify_classical


class PairCase(enum.Enum):
    INTERSECTING = "intersecting"
    DISJOINT = "disjoint"
    DEGENERATE = "degenerate"

    def __str__(self):
        return self.value


def _require_hyperbolic(*maps, tol=None):
    for T in maps:
        kind = classify(T, tol)
        if kind is not Kind.HYPERBOLIC:
            raise NotHyperbolic(f"{T!r} is {kind}")


def pair_case(A: MoebiusMap, B: MoebiusMap, tol=None) -> PairCase:
    _require_hyperbolic(A, B, tol=tol)
    a_att, a_rep = fixed_points(A, tol)
    b_att, b_rep = fixed_points(B, tol)
    try:
        linked = pairs_linked((a_rep, a_att), (b_rep, b_att), tol)
    except SharedEndpoint:
        return PairCase.DEGENERATE
    return PairCase.INTERSECTING if linked else PairCase.DISJOINT


def degenerate_reason(A, B, tol=None) -> str:
    a = fixed_points(A, tol)
    b = fixed_points(B, tol)
    shared = sum(same_point(p, q, tol) for p in a for q in b)
    return "same axis" if shared >= 2 else "shared endpoint"


# intersecting axes ---------------------------------------------------------

@dataclass(frozen=True)
class CommutatorVerdict:
    schottky: bool
    trace: float  # signed trace of A B A^-1 B^-1
    kind: Kind
    reason: str = ""

    @property
    def quotient(self):
        return "one-holed torus" if self.schottky else None

    @property
    def classical_on_every_pair(self):
        return self.schottky


def commutator_kind(trace: float, tol=None) -> Kind:
    tol = resolve(tol)
    t = abs(trace)
    if abs(t - 2.0) <= tol:
        return Kind.PARABOLIC
    return Kind.HYPERBOLIC if t > 2.0 else Kind.ELLIPTIC


def intersecting_pair_schottky_test(A: MoebiusMap, B: MoebiusMap, tol=None) -> CommutatorVerdict:
    """Schottky iff the commutator A B A^-1 B^-1 is hyperbolic."""
    if pair_case(A, B, tol) is not PairCase.INTERSECTING:
        raise WrongCase("axes do not intersect")
    tr = signed_commutator_trace(A, B)
    kind = commutator_kind(tr, tol)
    if kind is Kind.HYPERBOLIC:
        return CommutatorVerdict(True, tr, kind)
    return CommutatorVerdict(False, tr, kind, f"{kind} commutator")


def _restore(sys: SchottkySystem, swapped: bool, inv_first: bool, inv_second: bool, A, B, tol):
    """Re-express a system built on a relabelled pair in terms of (A, B)."""
    pairs = list(sys.pairs)
    # inverting a generator exchanges the roles of its two circles
    if inv_first:
        pairs[0] = pairs[0][::-1]
    if inv_second:
        pairs[1] = pairs[1][::-1]
    if swapped:
        pairs.reverse()
    gens = [conjugate(sys.frame, g, tol) for g in (A, B)]
    return SchottkySystem(gens, pairs, frame=sys.frame)


def _labelings(A, B):
    for swapped in (False, True):
        P, Q = (B, A) if swapped else (A, B)
        for inv_p in (False, True):
            for inv_q in (False, True):
                yield swapped, inv_p, inv_q, (inverse(P) if inv_p else P), (inverse(Q) if inv_q else Q)


def _torus_circles(A: MoebiusMap, B: MoebiusMap, tol):
    # Gaps of the fundamental domain, glued into one boundary cycle:
    #   g1 = (q2, p1) in J,  g4 = (A p1, q1) in A J,
    #   g3 = (B q1, A p2) in BA J,  g2 = (p2, B q2) in A^-1 BA J,
    # where J is the ordinary interval preserved by K = B^-1 A^-1 B A.
    K = compose_all(inverse(B), inverse(A), B, A, tol=tol)
    if classify(K, tol) is not Kind.HYPERBOLIC:
        return None
    f1, f2 = fixed_points(K, tol)
    _, ref = fixed_points(A, tol)  # a limit point, outside every gap
    x = arc_midpoint(f1, f2, ref)
    kx = apply_boundary(inverse(K), x)
    q2 = x
    p1 = arc_point(x, kx, ref, 1.0 / 3.0)
    q1 = arc_point(apply_boundary(A, p1), apply_boundary(A, kx), ref, 0.5)
    ap2 = arc_point(apply_boundary(B, q1), apply_boundary(compose(A, B), x), ref, 0.5)
    p2 = apply_boundary(inverse(A), ap2)
    feet = [(p1, p2), (apply_boundary(A, p1), ap2),
            (q1, q2), (apply_boundary(B, q1), apply_boundary(B, q2))]
    M = frame_to_infinity(arc_midpoint(q2, p1, ref))
    circles = _circles_or_none([(apply_boundary(M, u), apply_boundary(M, v)) for u, v in feet])
    if circles is None:
        return None
    gens = [conjugate(M, A, tol), conjugate(M, B, tol)]
    sys = SchottkySystem(gens, [(circles[0], circles[1]), (circles[2], circles[3])], frame=M)
    return sys if verify_classical(sys, tol).passed else None


def commutator_build_circles(A: MoebiusMap, B: MoebiusMap, tol=None) -> SchottkySystem:
    """Classical circles for an intersecting-axes Schottky pair.

    The four gaps between circles are placed in the ordinary intervals
    visited by the single boundary cycle of the one-holed torus, and
    infinity is moved into the first gap (recorded in ``frame``).  All
    relabellings of the pair are tried before giving up.
    """
    tol = resolve(tol)
    verdict = intersecting_pair_schottky_test(A, B, tol)
    if not verdict.schottky:
        raise WrongCase(f"not Schottky: {verdict.reason}")
    for swapped, inv_p, inv_q, X, Y in _labelings(A, B):
        sys = _torus_circles(X, Y, tol)
        if sys is None:
            continue
        out = _restore(sys, swapped, inv_p, inv_q, A, B, tol)
        if verify_classical(out, tol).passed:
            return out
    raise ConstructionFailed(None)


# disjoint axes -------------------------------------------------------------

@dataclass(frozen=True)
class OrientedPair:
    A: MoebiusMap
    B: MoebiusMap
    inverted_first: bool = False
    inverted_second: bool = False


def is_standard(A: MoebiusMap, B: MoebiusMap, tol=None) -> bool:
    """Attracting fixed points adjacent: the arc from att(A) to att(B)
    avoiding rep(A) does not contain rep(B)."""
    a_att, a_rep = fixed_points(A, tol)
    b_att, b_rep = fixed_points(B, tol)
    return not point_in_arc(b_rep, a_att, b_att, a_rep, tol)


def orient_pair_standard(A: MoebiusMap, B: MoebiusMap, tol=None) -> OrientedPair:
    """Invert generators until the pair is in standard orientation.

    Tries no inversion, then B only, then A only, then both.
    """
    case = pair_case(A, B, tol)
    if case is PairCase.DEGENERATE:
        raise DegeneratePair(degenerate_reason(A, B, tol))
    if case is not PairCase.DISJOINT:
        raise WrongCase("axes intersect")
    for inv_a, inv_b in ((False, False), (False, True), (True, False), (True, True)):
        X = inverse(A) if inv_a else A
        Y = inverse(B) if inv_b else B
        if is_standard(X, Y, tol):
            return OrientedPair(X, Y, inv_a, inv_b)
    raise AssertionError("no inversion choice is standard")  # unreachable for disjoint axes


def _as_oriented(pair, tol=None) -> OrientedPair:
    if isinstance(pair, OrientedPair):
        return pair
    return orient_pair_standard(*pair, tol=tol)


@dataclass(frozen=True)
class Lemma3Verdict:
    classical: bool
    fixed_points: tuple[BoundaryPoint, BoundaryPoint]  # (attracting, repelling) of B^-1 A
    test_element: MoebiusMap


def lemma3_classical_test(pair, tol=None) -> Lemma3Verdict:
    """Classical on (A, B) iff both fixed points of B^-1 A lie in the arc
    between rep(A) and rep(B) that avoids att(A).

    ``pair`` is an :class:`OrientedPair` or a plain ``(A, B)`` tuple, which
    is oriented first.
    """
    op = _as_oriented(pair, tol)
    A, B = op.A, op.B
    T = compose(inverse(B), A)
    kind = classify(T, tol)
    if kind is not Kind.HYPERBOLIC:
        raise TestElementNotHyperbolic(kind)
    f_att, f_rep = fixed_points(T, tol)
    a_att, a_rep = fixed_points(A, tol)
    _, b_rep = fixed_points(B, tol)
    inside = all(point_in_arc(f, a_rep, b_rep, a_att, tol) for f in (f_att, f_rep))
    return Lemma3Verdict(inside, (f_att, f_rep), T)


def _build_in_frame(A: MoebiusMap, B: MoebiusMap, tol):
    T = compose(inverse(B), A)
    f1, f2 = fixed_points(T, tol)
    a_att, a_rep = fixed_points(A, tol)
    b_att, b_rep = fixed_points(B, tol)
    x = arc_midpoint(f1, f2, a_rep)
    ax, bx = apply_boundary(A, x), apply_boundary(B, x)
    y = arc_point(ax, bx, x, 1.0 / 3.0)
    z = arc_point(ax, bx, x, 2.0 / 3.0)
    w_a = arc_midpoint(a_rep, a_att, b_rep)
    w_b = arc_midpoint(b_rep, b_att, a_rep)
    feet = [
        (apply_boundary(inverse(A), y), w_a),  # C_A
        (y, apply_boundary(A, w_a)),  # C'_A
        (apply_boundary(inverse(B), z), w_b),  # C_B
        (z, apply_boundary(B, w_b)),  # C'_B
    ]
    return x, feet


def _circles_or_none(feet):
    out = []
    for u, v in feet:
        if u.is_infinite or v.is_infinite:
            return None
        lo, hi = sorted((u.to_real(), v.to_real()))
        if not hi > lo:
            return None
        out.append(CircleOnAxis(0.5 * (lo + hi), 0.5 * (hi - lo)))
    return out


def lemma3_build_circles(pair, tol=None) -> SchottkySystem:
    """Explicit classical circles for a pair passing the classicality test.

    Recipe: x is the midpoint of the arc cut off by the axis of B^-1 A; y
    and z trisect the arc from Ax to Bx; the second feet are the midpoint
    w_A of A's axis arc and its image (same for B).  Circles
    C_A = (A^-1 y, w_A), C'_A = (y, A w_A), C_B = (B^-1 z, w_B),
    C'_B = (z, B w_B).  If infinity falls inside one of them the pair is
    first conjugated so that x goes to infinity; ``frame`` records this.
    """
    tol = resolve(tol)
    op = _as_oriented(pair, tol)
    verdict = lemma3_classical_test(op, tol)
    if not verdict.classical:
        raise WrongCase("pair is not classical on these generators")
    A, B = op.A, op.B
    x, feet = _build_in_frame(A, B, tol)
    last = None
    circles = _circles_or_none(feet)
    if circles is not None:
        sys = SchottkySystem([A, B], [(circles[0], circles[1]), (circles[2], circles[3])])
        last = verify_classical(sys, tol)
        if last.passed:
            return sys
    M = frame_to_infinity(x)
    A2, B2 = conjugate(M, A, tol), conjugate(M, B, tol)
    _, feet = _build_in_frame(A2, B2, tol)
    circles = _circles_or_none(feet)
    if circles is None:
        raise ConstructionFailed(last)
    sys = SchottkySystem([A2, B2], [(circles[0], circles[1]), (circles[2], circles[3])], frame=M)
    last = verify_classical(sys, tol)
    if not last.passed:
        raise ConstructionFailed(last)
    return sys


# non-classicality certificate ---------------------------------------------

@dataclass(frozen=True)
class Labeling:
    """Roles in the separation test: ``first`` plays A and ``second`` B.

    ``swapped`` means first/second come from (B, A); the inversion flags
    refer to the generator after the swap.
    """

    swapped: bool
    inverted_first: bool
    inverted_second: bool

    def to_dict(self):
        return {"swapped": self.swapped, "inverted_first": self.inverted_first,
                "inverted_second": self.inverted_second}


@dataclass(frozen=True)
class SeparationCertificate:
    labeling: Labeling
    first: MoebiusMap
    second: MoebiusMap
    separation_point: BoundaryPoint  # attracting fixed point of second * first^-1


def theorem4_separation_certificate(A: MoebiusMap, B: MoebiusMap, tol=None) -> SeparationCertificate | None:
    """Look for a labeling (X, Y) of the pair, in standard orientation, for
    which the attracting fixed point of Y X^-1 separates the fixed points of
    X (lies in the arc between them avoiding Y's fixed points).  Such a
    labeling certifies that no classical circles exist on the pair."""
    case = pair_case(A, B, tol)
    if case is not PairCase.DISJOINT:
        raise WrongCase(f"axes are {case}")
    for swapped in (False, True):
        P, Q = (B, A) if swapped else (A, B)
        for inv_p in (False, True):
            for inv_q in (False, True):
                X = inverse(P) if inv_p else P
                Y = inverse(Q) if inv_q else Q
                if not is_standard(X, Y, tol):
                    continue
                S = compose(Y, inverse(X))
                if classify(S, tol) is not Kind.HYPERBOLIC:
                    continue
                s_att, _ = fixed_points(S, tol)
                x_att, x_rep = fixed_points(X, tol)
                y_att, _ = fixed_points(Y, tol)
                if point_in_arc(s_att, x_rep, x_att, y_att, tol):
                    return SeparationCertificate(Labeling(swapped, inv_p, inv_q), X, Y, s_att)
    return None
