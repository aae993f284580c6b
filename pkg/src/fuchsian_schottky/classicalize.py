"""Search Nielsen-equivalent generating tuples for a classical one.

Every Fuchsian Schottky group is classical on *some* generating tuple, but
nothing bounds how far that tuple is from the given one.  The search is a
breadth-first walk over elementary Nielsen moves, bounded by a budget on
the number of tuples examined.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._tol import resolve
from .errors import ConstructionFailed, IdentityGenerator, NonHyperbolicGenerator, NotSchottky, TestElementNotHyperbolic
from .geometry import isometric_circles
from .moebius import (
    IDENTITY,
    Kind,
    MoebiusMap,
    classify,
    compose,
    conjugate,
    inverse,
    is_identity,
    rotation,
)
from .pairs import (
    PairCase,
    commutator_build_circles,
    intersecting_pair_schottky_test,
    lemma3_build_circles,
    lemma3_classical_test,
    orient_pair_standard,
    pair_case,
)
from .system import SchottkySystem, evaluate_word, multiply_words, verify_classical


@dataclass(frozen=True)
class NielsenMove:
    """One elementary move on a generating tuple (0-based indices).

    kind "invert": g_i <- g_i^-1
    kind "swap":   g_i <-> g_j
    kind "mul":    g_i <- g_i g_j^power (side "right") or g_j^power g_i ("left")
    """

    kind: str
    i: int
    j: int = -1
    side: str = ""
    power: int = 0

    def to_dict(self):
        d = {"kind": self.kind, "i": self.i}
        if self.kind != "invert":
            d["j"] = self.j
        if self.kind == "mul":
            d["side"] = self.side
            d["power"] = self.power
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["kind"], d["i"], d.get("j", -1), d.get("side", ""), d.get("power", 0))

    def __str__(self):
        if self.kind == "invert":
            return f"g{self.i + 1} <- g{self.i + 1}^-1"
        if self.kind == "swap":
            return f"g{self.i + 1} <-> g{self.j + 1}"
        other = f"g{self.j + 1}" + ("" if self.power == 1 else "^-1")
        me = f"g{self.i + 1}"
        rhs = f"{me} {other}" if self.side == "right" else f"{other} {me}"
        return f"{me} <- {rhs}"


def nielsen_moves(r: int) -> list[NielsenMove]:
    """Inversions, cyclically adjacent swaps, then one-sided multiplications."""
    moves = [NielsenMove("invert", i) for i in range(r)]
    if r >= 2:
        moves += [NielsenMove("swap", i, (i + 1) % r) for i in range(r)]
    for i in range(r):
        for j in range(r):
            if i == j:
                continue
            for side in ("right", "left"):
                for power in (1, -1):
                    moves.append(NielsenMove("mul", i, j, side, power))
    return moves


def _apply(items, move: NielsenMove, inv, mul):
    out = list(items)
    i, j = move.i, move.j
    if move.kind == "invert":
        out[i] = inv(items[i])
    elif move.kind == "swap":
        out[i], out[j] = items[j], items[i]
    else:
        other = items[j] if move.power == 1 else inv(items[j])
        out[i] = mul(items[i], other) if move.side == "right" else mul(other, items[i])
    return tuple(out)


def apply_move(gens: Sequence[MoebiusMap], move: NielsenMove, tol=None) -> tuple[MoebiusMap, ...]:
    return _apply(tuple(gens), move, lambda g: inverse(g, tol), lambda g, h: compose(g, h, tol))


def apply_move_words(words, move: NielsenMove):
    return _apply(tuple(words), move, lambda w: tuple(-s for s in reversed(w)), multiply_words)


def apply_path(gens, path, tol=None):
    for move in path:
        gens = apply_move(gens, move, tol)
    return tuple(gens)


def tuple_key(gens, digits: int = 7):
    return tuple(g.key(digits) for g in gens)


def nielsen_neighbors(gens: Sequence[MoebiusMap], tol=None) -> list[tuple[MoebiusMap, ...]]:
    """Distinct tuples one elementary move away, in move order."""
    return [t for _, t in _neighbors_with_moves(tuple(gens), tol)]


def _neighbors_with_moves(gens, tol):
    for g in gens:
        if is_identity(g, tol):
            raise IdentityGenerator("a generator is the identity")
    seen = set()
    out = []
    for move in nielsen_moves(len(gens)):
        t = apply_move(gens, move, tol)
        key = tuple_key(t)
        if key in seen:
            continue
        seen.add(key)
        out.append((move, t))
    return out


# certification attempts ----------------------------------------------------

def search_frames(seed: int, count: int) -> list[MoebiusMap]:
    """Identity followed by ``count`` seeded rotations about i."""
    rng = np.random.default_rng(seed)
    return [IDENTITY] + [rotation(float(th)) for th in rng.uniform(0.0, math.pi, count)]


def certify_by_frames(gens, frames, tol=None) -> SchottkySystem | None:
    """Try the isometric circles of the conjugated tuple in each frame."""
    tol = resolve(tol)
    for M in frames:
        conj = [conjugate(M, g, tol) for g in gens]
        if any(abs(g.c) <= tol for g in conj):
            continue
        sys = SchottkySystem(conj, [isometric_circles(g, tol) for g in conj], frame=M)
        if verify_classical(sys, tol).passed:
            return sys
    return None


def _certify_disjoint_pair(A, B, tol) -> SchottkySystem | None:
    op = orient_pair_standard(A, B, tol)
    try:
        verdict = lemma3_classical_test(op, tol)
    except TestElementNotHyperbolic as exc:
        raise NotSchottky(str(exc)) from exc
    if not verdict.classical:
        return None
    sys = lemma3_build_circles(op, tol)
    # undo the orientation inversions: A^-1 pairs (C, C') exactly when A pairs (C', C)
    flips = (op.inverted_first, op.inverted_second)
    gens = [conjugate(sys.frame, g, tol) for g in (A, B)]
    pairs = [(D, C) if flip else (C, D) for flip, (C, D) in zip(flips, sys.pairs)]
    out = SchottkySystem(gens, pairs, frame=sys.frame)
    return out if verify_classical(out, tol).passed else None


def try_certify(gens, frames, tol=None) -> SchottkySystem | None:
    tol = resolve(tol)
    if len(gens) == 2:
        case = pair_case(gens[0], gens[1], tol)
        if case is PairCase.DISJOINT:
            return _certify_disjoint_pair(gens[0], gens[1], tol)
        if case is PairCase.INTERSECTING:
            verdict = intersecting_pair_schottky_test(gens[0], gens[1], tol)
            if not verdict.schottky:
                raise NotSchottky(verdict.reason)
            try:
                return commutator_build_circles(gens[0], gens[1], tol)
            except ConstructionFailed:
                pass
        else:
            return None
    return certify_by_frames(gens, frames, tol)


# search --------------------------------------------------------------------

@dataclass(frozen=True)
class Found:
    generators: tuple[MoebiusMap, ...]  # the classical tuple, original frame
    system: SchottkySystem  # certified, possibly in a moved frame
    path: tuple[NielsenMove, ...]
    words: tuple[tuple[int, ...], ...]  # generators as words in the input tuple
    visited: int
    found = True

    @property
    def distance(self) -> int:
        return len(self.path)


@dataclass(frozen=True)
class BudgetExhausted:
    visited: int
    depth_reached: int = 0
    found = False


@dataclass(order=True)
class _State:
    depth: int
    weight: float
    serial: int
    gens: tuple = field(compare=False)
    words: tuple = field(compare=False)
    path: tuple = field(compare=False)


def find_classical_generators(gens: Sequence[MoebiusMap], budget: int = 10000, seed: int = 7,
                              frames: int = 32, tol=None, trace: list | None = None):
    """Breadth-first Nielsen search for a tuple with a classical certificate.

    Within one Nielsen distance, tuples are examined by increasing sum of
    |trace|.  ``budget`` caps the number of tuples examined.  If ``trace`` is
    a list, the (distance, trace sum) of every examined tuple is appended.

    Returns :class:`Found` or :class:`BudgetExhausted`; raises
    :class:`NotSchottky` if a two-generator test proves the group is not
    Schottky.
    """
    tol = resolve(tol)
    gens = tuple(gens)
    for g in gens:
        if classify(g, tol) is not Kind.HYPERBOLIC:
            raise NonHyperbolicGenerator(f"{g!r} is {classify(g, tol)}")
    r = len(gens)
    if budget < 1:
        return BudgetExhausted(0)
    frame_list = search_frames(seed, frames)
    start = _State(0, sum(g.trace for g in gens), 0, gens,
                   tuple((i + 1,) for i in range(r)), ())
    level = [start]
    seen = {tuple_key(gens)}
    visited = 0
    serial = 1
    depth = 0
    while level:
        level.sort()
        nxt = []
        for st in level:
            if visited >= budget:
                return BudgetExhausted(visited, depth)
            visited += 1
            if trace is not None:
                trace.append((st.depth, st.weight))
            sys = try_certify(st.gens, frame_list, tol)
            if sys is not None:
                return Found(st.gens, sys, st.path, st.words, visited)
            for move, t in _neighbors_with_moves(st.gens, tol):
                key = tuple_key(t)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(_State(st.depth + 1, sum(g.trace for g in t), serial, t,
                                  apply_move_words(st.words, move), st.path + (move,)))
                serial += 1
        level = nxt
        depth += 1
    return BudgetExhausted(visited, depth)


def check_found(original: Sequence[MoebiusMap], result: Found, tol=None) -> bool:
    """Independent re-check: the certificate verifies, the path and the
    words both reproduce the found tuple, and the frame matches."""
    tol = resolve(tol)
    if not verify_classical(result.system, tol).passed:
        return False
    via_path = apply_path(tuple(original), result.path, tol)
    via_words = tuple(evaluate_word(original, w, tol) for w in result.words)
    framed = tuple(conjugate(result.system.frame, g, tol) for g in result.generators)
    rel = 1e3 * tol
    return (all(x.isclose(y, rel) for x, y in zip(via_path, result.generators))
            and all(x.isclose(y, rel) for x, y in zip(via_words, result.generators))
            and all(x.isclose(y, rel) for x, y in zip(framed, result.system.generators)))
