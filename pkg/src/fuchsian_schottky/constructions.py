"""Explicit groups: the standard classical groups G_{n,h}, one-holed torus
pairs, and a pair that is Schottky but not classical on its generators."""
from __future__ import annotations

import math
from dataclasses import dataclass

from ._tol import resolve
from .errors import AutoGrowthExhausted, NotSchottky
from .geometry import CircleOnAxis, build_hyperbolic, geodesic_through, isometric_circles
from .moebius import MoebiusMap, compose, translation_length
from .pairs import intersecting_pair_schottky_test
from .system import SchottkySystem, rank_genus_relation, verify_classical

AUTO_T0 = 2.0 * math.log(8.0)
MAX_DOUBLINGS = 40


def axis_angles(n: int) -> list[float]:
    """Directions of 2n geodesics through i, equally spaced (disc angle pi/(2n))."""
    return [(2 * k + 1) * math.pi / (8 * n) for k in range(2 * n)]


def _gap_interval(circles: list[CircleOnAxis]) -> tuple[float, float]:
    # first gap in left-to-right order between neighbouring circles
    ordered = sorted(circles, key=lambda C: C.left)
    return ordered[0].right, ordered[1].left


def _build(n: int, h: int, t: float, tol) -> SchottkySystem:
    gens: list[MoebiusMap] = []
    pairs: list[tuple[CircleOnAxis, CircleOnAxis]] = []
    for phi in axis_angles(n) if n else []:
        g = geodesic_through(phi, tol)
        A = build_hyperbolic(g.p, g.q, t, tol)
        gens.append(A)
        pairs.append(isometric_circles(A, tol))
    if h >= 2:
        if n:
            lo, hi = _gap_interval([C for pair in pairs for C in pair])
        else:
            lo, hi = -1.0, 1.0
        width = hi - lo
        for m in range(1, h):
            f = 3.0 ** (-m)
            A = build_hyperbolic(lo + f * width, hi - f * width, t, tol)
            gens.append(A)
            pairs.append(isometric_circles(A, tol))
    return SchottkySystem(gens, pairs)


def standard_group(n: int, h: int, t: float | str | None = "auto", tol=None) -> SchottkySystem:
    """Certified classical Schottky system for a genus-n surface with h holes.

    Genus part: 2n hyperbolic generators whose axes all pass through i.
    Holes: h - 1 generators with nested axes inside the first gap between
    circles of the genus part (or inside [-1, 1] when n = 0).  Every
    generator has translation length ``t`` and its isometric circles as
    pairing circles.  With ``t="auto"`` the length starts at 2 ln 8 and is
    doubled until the system certifies.
    """
    tol = resolve(tol)
    r = rank_genus_relation(n, h)
    if t is None or t == "auto":
        length = AUTO_T0
        for _ in range(MAX_DOUBLINGS):
            sys = _build(n, h, length, tol)
            if verify_classical(sys, tol).passed:
                return sys
            length *= 2.0
        raise AutoGrowthExhausted(f"G_{n},{h} did not certify")
    sys = _build(n, h, float(t), tol)
    assert sys.rank == r
    return sys


def standard_length(n: int, h: int, tol=None) -> float:
    """Translation length chosen by the auto rule for G_{n,h}."""
    sys = standard_group(n, h, "auto", tol)
    return translation_length(sys.generators[0])


def one_holed_torus_pair(lam: float, t: float, tol=None) -> tuple[MoebiusMap, MoebiusMap]:
    """A = diag(lam, 1/lam), B = [[cosh t, sinh t], [sinh t, cosh t]],
    returned only if they generate a Schottky group."""
    if not lam > 1.0 or not t > 0.0:
        raise ValueError("need lam > 1 and t > 0")
    A = MoebiusMap(lam, 0.0, 0.0, 1.0 / lam)
    B = MoebiusMap(math.cosh(t), math.sinh(t), math.sinh(t), math.cosh(t))
    verdict = intersecting_pair_schottky_test(A, B, tol)
    if not verdict.schottky:
        raise NotSchottky(verdict.reason)
    return A, B


@dataclass(frozen=True)
class NonclassicalExample:
    A: MoebiusMap
    AB: MoebiusMap
    witness: SchottkySystem  # certified system on (A, B)
    t: float

    @property
    def pair(self):
        return (self.A, self.AB)


def nonclassical_pair_example(t: float | None = None, tol=None) -> NonclassicalExample:
    """The pair (A, AB) of a classical Schottky group on (A, B).

    A and B translate along (-3, -1) and (3, 1).  The group is certified by
    the isometric circles of A and B (the witness), while the generating pair
    (A, AB) fails the disjoint-axes classicality test.
    """
    tol = resolve(tol)
    length = 2.0 * math.log(10.0) if t is None else float(t)
    for _ in range(MAX_DOUBLINGS):
        A = build_hyperbolic(-3.0, -1.0, length, tol)
        B = build_hyperbolic(3.0, 1.0, length, tol)
        witness = SchottkySystem([A, B], [isometric_circles(A, tol), isometric_circles(B, tol)])
        if verify_classical(witness, tol).passed:
            return NonclassicalExample(A, compose(A, B, tol), witness, length)
        length *= 2.0
    raise AutoGrowthExhausted("base pair did not certify")
