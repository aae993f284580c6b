import math

import pytest

from fuchsian_schottky import (
    IDENTITY,
    build_hyperbolic,
    compose,
    evaluate_word,
    find_classical_generators,
    inverse,
    nielsen_moves,
    nielsen_neighbors,
    nonclassical_pair_example,
    one_holed_torus_pair,
    standard_group,
    verify_classical,
)
from fuchsian_schottky.classicalize import (
    NielsenMove,
    apply_move,
    apply_move_words,
    apply_path,
    check_found,
    search_frames,
)
from fuchsian_schottky.errors import IdentityGenerator, NonHyperbolicGenerator, NotSchottky
from fuchsian_schottky.moebius import MoebiusMap


def test_move_enumeration_rank2():
    moves = nielsen_moves(2)
    # 2 inversions, 2 cyclic swaps, 4 r (r - 1) = 8 multiplications
    assert len(moves) == 12


def test_neighbors_rank2(pair_ab):
    a, b = pair_ab
    nbrs = nielsen_neighbors(pair_ab)
    assert len(nbrs) == 11  # the two cyclic swaps coincide for r = 2
    expected = [(a, compose(a, b)), (a, compose(b, a)), (compose(a, inverse(b)), b),
                (inverse(a), b), (b, a)]
    for want in expected:
        assert any(all(x.isclose(y) for x, y in zip(t, want)) for t in nbrs)


def test_neighbors_rank1(pair_ab):
    a = pair_ab[0]
    nbrs = nielsen_neighbors((a,))
    assert len(nbrs) == 1 and nbrs[0][0].isclose(inverse(a))


def test_neighbors_identity_rejected(pair_ab):
    with pytest.raises(IdentityGenerator):
        nielsen_neighbors((pair_ab[0], IDENTITY))


def test_move_round_trip_dict():
    for mv in nielsen_moves(3):
        assert NielsenMove.from_dict(mv.to_dict()) == mv


def test_moves_preserve_group(pair_ab):
    """Each move's tuple and the input generate each other by explicit words."""
    for mv in nielsen_moves(2):
        new = apply_move(pair_ab, mv)
        words = apply_move_words(((1,), (2,)), mv)
        for w, g in zip(words, new):
            assert evaluate_word(pair_ab, w).isclose(g, 1e-9)
        # the inverse direction: old generators as words in the new ones
        for mv2 in nielsen_moves(2):
            if all(evaluate_word(new, w).isclose(g, 1e-9)
                   for w, g in zip(apply_move_words(((1,), (2,)), mv2), pair_ab)):
                break
        else:
            pytest.fail(f"no single move undoes {mv}")


def test_search_recovers_classical_pair():
    ex = nonclassical_pair_example()
    res = find_classical_generators(ex.pair, budget=1000)
    assert res.found and res.distance <= 2
    assert check_found(ex.pair, res)
    assert verify_classical(res.system).passed


def test_search_distance_zero(pair_ab):
    res = find_classical_generators(pair_ab, budget=10)
    assert res.found and res.distance == 0 and check_found(pair_ab, res)


def test_search_standard_groups():
    for nh in [(1, 1), (0, 3), (2, 1)]:
        gens = standard_group(*nh).generators
        res = find_classical_generators(gens, budget=5)
        assert res.found and res.distance == 0 and check_found(gens, res)


def test_search_intersecting_pairs():
    A, B = one_holed_torus_pair(2.0, 1.2)
    for gens in [(A, B), (inverse(A), B), (B, A), (compose(A, B), B)]:
        res = find_classical_generators(gens, budget=50)
        assert res.found and check_found(gens, res)


def test_search_not_schottky():
    A = MoebiusMap(2.0, 0.0, 0.0, 0.5)
    B = MoebiusMap(math.cosh(1.0), math.sinh(1.0), math.sinh(1.0), math.cosh(1.0))
    with pytest.raises(NotSchottky):
        find_classical_generators((A, B), budget=10)


def test_budget_zero(pair_ab):
    res = find_classical_generators(pair_ab, budget=0)
    assert not res.found and res.visited == 0


def test_budget_exhausted_reports_visits():
    ex = nonclassical_pair_example()
    res = find_classical_generators(ex.pair, budget=1)
    assert not res.found and res.visited == 1


def test_non_hyperbolic_input():
    with pytest.raises(NonHyperbolicGenerator):
        find_classical_generators((MoebiusMap(1, 1, 0, 1),), budget=5)


def test_search_deterministic():
    ex = nonclassical_pair_example()
    t1, t2 = [], []
    r1 = find_classical_generators(ex.pair, budget=200, seed=3, trace=t1)
    r2 = find_classical_generators(ex.pair, budget=200, seed=3, trace=t2)
    assert t1 == t2 and r1.path == r2.path and r1.words == r2.words


def test_path_reproduces_tuple():
    ex = nonclassical_pair_example()
    res = find_classical_generators(ex.pair, budget=1000)
    out = apply_path(ex.pair, res.path)
    assert all(x.isclose(y, 1e-9) for x, y in zip(out, res.generators))


def test_search_frames_seeded():
    f1, f2 = search_frames(7, 5), search_frames(7, 5)
    assert len(f1) == 6 and f1[0] == IDENTITY
    assert all(x == y for x, y in zip(f1, f2))
