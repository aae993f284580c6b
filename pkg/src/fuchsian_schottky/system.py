"""Marked Schottky systems and the classical (circle ping-pong) certificate.

A system is a list of generators ``A_i`` with one circle pair
``(C_i, C'_i)`` per generator.  It is *certified* when the 2g circles are
disjoint and each ``A_i`` carries the outside of ``C_i`` onto the inside of
``C'_i``; the group is then free on the generators, discrete and purely
hyperbolic, with the common exterior of the circles as fundamental domain.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from . import kernels
from ._tol import resolve
from .boundary import INF, BoundaryPoint, chordal
from .errors import (
    BadIndex,
    InfinityInside,
    InvalidSurface,
    NotCertified,
    NotReduced,
    ParityError,
    PoleOnCircle,
)
from .geometry import CircleOnAxis, feet_distance, image_circle
from .moebius import (
    IDENTITY,
    Kind,
    MoebiusMap,
    apply_boundary,
    classify,
    compose_all,
    conjugate,
    inverse,
)

Word = tuple  # signed 1-based generator indices


@dataclass(frozen=True)
class SchottkySystem:
    """Generators with paired circles.

    ``frame`` records a conjugation: when the system was built in a moved
    frame, ``generators[i] == frame @ original[i] @ frame^-1``.
    """

    generators: tuple[MoebiusMap, ...]
    pairs: tuple[tuple[CircleOnAxis, CircleOnAxis], ...]
    frame: MoebiusMap = field(default=IDENTITY)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "pairs", tuple((C, D) for C, D in self.pairs))
        if len(self.pairs) != len(self.generators):
            raise ValueError("need exactly one circle pair per generator")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def circles(self) -> list[CircleOnAxis]:
        """Flat list C_1, C'_1, C_2, C'_2, ..."""
        return [C for pair in self.pairs for C in pair]


@dataclass(frozen=True)
class Certificate:
    """Passing verdict.  ``margin`` is the smallest gap between circle
    intervals; ``residual`` the worst chordal pairing mismatch."""

    margin: float
    residual: float
    passed = True

    def to_dict(self):
        return {"passed": True, "margin": self.margin, "residual": self.residual}


@dataclass(frozen=True)
class Violation:
    """Failing verdict: which condition broke, and for which generator or
    circle index (0-based)."""

    condition: str  # "overlap", "direction", "pairing", "not_hyperbolic"
    index: int
    detail: str = ""
    passed = False

    def to_dict(self):
        return {"passed": False, "condition": self.condition,
                "index": self.index, "detail": self.detail}


def verify_classical(sys: SchottkySystem, tol=None) -> Certificate | Violation:
    """Check the classical Schottky conditions on ``sys``.

    Conditions, in the order checked: every generator hyperbolic; the 2g
    closed intervals pairwise disjoint with gap > tol; ``A_i(oo)`` strictly
    inside ``C'_i``; ``A_i(C_i) = C'_i`` within tol.
    """
    tol = resolve(tol)
    for i, A in enumerate(sys.generators):
        kind = classify(A, tol)
        if kind is not Kind.HYPERBOLIC:
            return Violation("not_hyperbolic", i, f"generator is {kind}")
    circles = sys.circles
    for j, C in enumerate(circles):
        if not (math.isfinite(C.center) and math.isfinite(C.radius)):
            raise InfinityInside(f"circle {j} is unbounded")
    order = sorted(range(len(circles)), key=lambda j: circles[j].left)
    margin = math.inf
    for j, k in zip(order, order[1:]):
        gap = circles[k].left - circles[j].right
        if not gap > tol:
            return Violation("overlap", min(j, k),
                             f"circles {j} and {k} overlap (gap {gap:.3g})")
        margin = min(margin, gap)
    residual = 0.0
    for i, (A, (C, D)) in enumerate(zip(sys.generators, sys.pairs)):
        w = apply_boundary(A, INF)
        if w.is_infinite or not D.contains(w.to_real()):
            return Violation("direction", i, "A_i(oo) is not inside C'_i")
        try:
            image = image_circle(A, C, tol)
        except PoleOnCircle as exc:
            return Violation("pairing", i, str(exc))
        err = feet_distance(image, D)
        if err > tol:
            return Violation("pairing", i, f"A_i(C_i) misses C'_i by {err:.3g}")
        residual = max(residual, err)
    return Certificate(margin if len(circles) > 1 else math.inf, residual)


def violating_circles(sys: SchottkySystem, tol=None) -> set[int]:
    """Indices into ``sys.circles`` of every circle involved in a violation."""
    tol = resolve(tol)
    circles = sys.circles
    bad = set()
    for j in range(len(circles)):
        for k in range(j + 1, len(circles)):
            if circles[k].left - circles[j].right <= tol and circles[j].left - circles[k].right <= tol:
                bad.update((j, k))
    for i, (A, (C, D)) in enumerate(zip(sys.generators, sys.pairs)):
        one = SchottkySystem([A], [(C, D)])
        if not verify_classical(one, tol).passed:
            bad.update((2 * i, 2 * i + 1))
    return bad


def certify(sys: SchottkySystem, tol=None) -> Certificate:
    """Like :func:`verify_classical` but raise :class:`NotCertified` on failure."""
    verdict = verify_classical(sys, tol)
    if not verdict.passed:
        raise NotCertified(verdict)
    return verdict


def conjugate_system(sys: SchottkySystem, M: MoebiusMap, tol=None) -> SchottkySystem:
    """Move the whole configuration by ``M``; circles must stay bounded."""
    gens = [conjugate(M, A, tol) for A in sys.generators]
    pairs = [(image_circle(M, C, tol), image_circle(M, D, tol)) for C, D in sys.pairs]
    return SchottkySystem(gens, pairs, frame=compose_all(M, sys.frame, tol=tol))


# words ---------------------------------------------------------------------

def is_reduced(w: Sequence[int]) -> bool:
    return all(x != -y for x, y in zip(w, w[1:]))


def reduce_word(w: Sequence[int]) -> Word:
    out: list[int] = []
    for s in w:
        if s == 0:
            raise BadIndex("letter 0 is not a generator index")
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


def invert_word(w: Sequence[int]) -> Word:
    return tuple(-s for s in reversed(w))


def multiply_words(u: Sequence[int], v: Sequence[int]) -> Word:
    return reduce_word(tuple(u) + tuple(v))


def format_word(w: Sequence[int]) -> str:
    """Signed-index string such as ``"1.-2.1"``; the empty word is ``""``."""
    return ".".join(str(s) for s in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    return tuple(int(s) for s in text.split(".")) if text else ()


def evaluate_word(generators: Sequence[MoebiusMap], w: Sequence[int], tol=None) -> MoebiusMap:
    """Product of generators and inverses, left to right; ``()`` gives I."""
    w = tuple(w)
    if not is_reduced(w):
        raise NotReduced(f"word {w} is not reduced")
    factors = []
    for s in w:
        i = abs(s) - 1
        if s == 0 or i >= len(generators):
            raise BadIndex(f"letter {s} out of range for {len(generators)} generators")
        factors.append(generators[i] if s > 0 else inverse(generators[i]))
    return compose_all(*factors, tol=tol)


def letter_index(s: int) -> int:
    """Kernel letter order 1, -1, 2, -2, ... as 0, 1, 2, 3, ..."""
    return 2 * (abs(s) - 1) + (1 if s < 0 else 0)


def reduced_words(ngens: int, max_len: int):
    """All nonempty reduced words up to ``max_len``, in DFS preorder."""
    if ngens <= 0:
        return []
    words, _ = kernels.word_products(np.tile([1.0, 0.0, 0.0, 1.0], (ngens, 1)), max_len)
    return [tuple(int(s) for s in row if s != 0) for row in words]


# limit set -----------------------------------------------------------------

@dataclass(frozen=True)
class LimitSample:
    word: Word
    point: float
    circle: CircleOnAxis


def _letter_discs(sys: SchottkySystem) -> np.ndarray:
    # letter +i pushes into C'_i, letter -i into C_i
    discs = []
    for C, D in sys.pairs:
        discs.append(D.feet)
        discs.append(C.feet)
    return np.array(discs, dtype=np.float64)


def limit_arrays(sys: SchottkySystem, depth: int):
    """Raw kernel output ``(words, lo, hi)`` for the nested circles."""
    gens = np.array([A.entries for A in sys.generators], dtype=np.float64)
    return kernels.limit_tree(gens, _letter_discs(sys), depth)


def limit_set_sample(sys: SchottkySystem, depth: int, tol=None, check: bool = True) -> list[LimitSample]:
    """Nested circles for every reduced word of length 1..depth.

    The circle of ``s_1 ... s_m`` is the image of the disc of ``s_m`` under
    the product ``s_1 ... s_{m-1}``, where the disc of ``+i`` is ``C'_i``
    and that of ``-i`` is ``C_i``.  Each circle lies strictly inside the
    circle of its prefix.  The sample point is the circle's centre.  Output
    is in DFS preorder with letters ordered 1, -1, 2, -2, ...
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if check:
        certify(sys, tol)
    words, lo, hi = limit_arrays(sys, depth)
    out = []
    for row, u, v in zip(words.tolist(), lo.tolist(), hi.tolist()):
        w = tuple(s for s in row if s != 0)
        C = CircleOnAxis(0.5 * (u + v), 0.5 * (v - u))
        out.append(LimitSample(w, C.center, C))
    return out


def all_words_hyperbolic(sys_or_gens, max_len: int, tol=None) -> bool:
    """Spot check of pure hyperbolicity over all reduced words up to ``max_len``."""
    gens = sys_or_gens.generators if isinstance(sys_or_gens, SchottkySystem) else sys_or_gens
    _, mats = kernels.word_products(np.array([A.entries for A in gens]), max_len)
    tr = np.abs(mats[:, 0] + mats[:, 3])
    return bool(np.all(tr > 2.0 + resolve(tol)))


# quotient surface ---------------------------------------------------------

def rank_genus_relation(n: int, h: int) -> int:
    """Rank of the free group of a genus-n surface with h >= 1 holes."""
    if n < 0 or h < 1:
        raise InvalidSurface(f"need n >= 0 and h >= 1, got ({n}, {h})")
    if (n, h) == (0, 1):
        raise InvalidSurface("a one-holed sphere is a disc")
    return 2 * n + h - 1


@dataclass(frozen=True)
class BoundaryCount:
    h: int  # boundary components of the quotient
    n: int  # genus
    r: int  # rank


def _nearest_foot(feet: list[tuple[float, int]], z: float) -> int:
    p = BoundaryPoint.from_real(z)
    return min(range(len(feet)), key=lambda j: chordal(p, BoundaryPoint.from_real(feet[j][0])))


def count_quotient_boundaries(sys: SchottkySystem, tol=None, check: bool = True) -> BoundaryCount:
    """Count the boundary circles of U/G for a certified system.

    The 2g arcs of R u {oo} outside the circles are glued end to end: an arc
    ending at a foot of ``C_i`` continues at the arc starting at the image of
    that foot under ``A_i`` (and likewise for ``C'_i`` with ``A_i^-1``).
    Each connected chain of arcs is one boundary component.
    """
    if check:
        certify(sys, tol)
    circles = sys.circles
    # each foot: (position, circle index); arcs run between consecutive circles
    order = sorted(range(len(circles)), key=lambda j: circles[j].left)
    m = len(order)
    feet: list[tuple[float, int]] = []
    arc_of_foot: list[int] = []
    for pos, j in enumerate(order):
        feet.append((circles[j].left, j))
        arc_of_foot.append((pos - 1) % m)  # arc to the left of circle pos
        feet.append((circles[j].right, j))
        arc_of_foot.append(pos)  # arc to the right
    parent = list(range(m))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f, (z, j) in enumerate(feet):
        i, primed = divmod(j, 2)
        A = sys.generators[i]
        g = inverse(A) if primed else A
        image = apply_boundary(g, BoundaryPoint.from_real(z)).to_real()
        target = _nearest_foot(feet, image)
        if feet[target][1] != (2 * i + (0 if primed else 1)):
            raise ParityError("foot image landed on the wrong circle")
        a, b = find(arc_of_foot[f]), find(arc_of_foot[target])
        if a != b:
            parent[a] = b
    h = len({find(x) for x in range(m)})
    r = sys.rank
    if (r + 1 - h) % 2:
        raise ParityError(f"rank {r} and {h} boundaries give a half-integer genus")
    return BoundaryCount(h=h, n=(r + 1 - h) // 2, r=r)
