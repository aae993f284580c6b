import math
import warnings

import numpy as np
import pytest

import oracles
from strategies import random_maps
from fuchsian_schottky import (
    MoebiusMap,
    PairCase,
    build_hyperbolic,
    chordal,
    commutator_build_circles,
    compose,
    conjugate,
    fixed_points,
    intersecting_pair_schottky_test,
    inverse,
    lemma3_build_circles,
    lemma3_classical_test,
    one_holed_torus_pair,
    orient_pair_standard,
    pair_case,
    signed_commutator_trace,
    theorem4_separation_certificate,
    verify_classical,
)
from fuchsian_schottky.classicalize import apply_move, nielsen_moves
from fuchsian_schottky.errors import DegeneratePair, NotHyperbolic, TestElementNotHyperbolic, WrongCase
from fuchsian_schottky.moebius import Kind

DIAG2 = MoebiusMap(2.0, 0.0, 0.0, 0.5)


def boost(t):
    return MoebiusMap(math.cosh(t), math.sinh(t), math.sinh(t), math.cosh(t))


def reals(pts):
    return sorted(p.to_real() for p in pts)


# pair_case -----------------------------------------------------------------

def test_pair_case_examples(pair_ab):
    assert pair_case(DIAG2, MoebiusMap(5 / 3, 4 / 3, 4 / 3, 5 / 3)) is PairCase.INTERSECTING
    assert pair_case(build_hyperbolic(-3, -1, 2.0), build_hyperbolic(1, 3, 2.0)) is PairCase.DISJOINT
    assert pair_case(DIAG2, compose(DIAG2, DIAG2)) is PairCase.DEGENERATE
    with pytest.raises(NotHyperbolic):
        pair_case(DIAG2, MoebiusMap(1, 1, 0, 1))


# intersecting axes ---------------------------------------------------------

@pytest.mark.parametrize("t, schottky, kind", [
    (1.0, False, Kind.ELLIPTIC),
    (math.log(3), False, Kind.PARABOLIC),
    (1.2, True, Kind.HYPERBOLIC),
])
def test_commutator_criterion(t, schottky, kind):
    v = intersecting_pair_schottky_test(DIAG2, boost(t))
    assert v.schottky is schottky and v.kind is kind
    assert v.trace == pytest.approx(oracles.commutator_trace_closed_form(2.0, t), abs=1e-9)
    assert v.trace == pytest.approx(oracles.commutator_trace_product(DIAG2.entries, boost(t).entries), abs=1e-9)


def test_parabolic_boundary_trace():
    v = intersecting_pair_schottky_test(DIAG2, boost(math.log(3)))
    assert abs(v.trace + 2.0) <= 1e-9


@pytest.mark.parametrize("lam", [1.5, 2.0, 3.0, 7.0])
@pytest.mark.parametrize("t", [0.1, 0.5, 1.0, 1.7, 2.5])
def test_commutator_formula_grid(lam, t):
    A = MoebiusMap(lam, 0, 0, 1 / lam)
    got = signed_commutator_trace(A, boost(t))
    want = oracles.commutator_trace_closed_form(lam, t)
    assert got == pytest.approx(want, abs=1e-9 * max(1.0, abs(want)))


def test_commutator_wrong_case(pair_ab):
    with pytest.raises(WrongCase):
        intersecting_pair_schottky_test(*pair_ab)


def test_commutator_build_circles_certifies():
    A, B = one_holed_torus_pair(2.0, 1.2)
    sys = commutator_build_circles(A, B)
    assert verify_classical(sys).passed
    # generators are the input pair, moved by the recorded frame
    for g, h in zip(sys.generators, (A, B)):
        assert g.isclose(conjugate(sys.frame, h), 1e-7)


def test_commutator_build_circles_random_pairs():
    rng = np.random.default_rng(8)
    done = 0
    for lam, t in zip(rng.uniform(1.5, 6.0, 40), rng.uniform(0.3, 3.0, 40)):
        A = MoebiusMap(lam, 0, 0, 1 / lam)
        if not intersecting_pair_schottky_test(A, boost(t)).schottky:
            continue
        assert verify_classical(commutator_build_circles(A, boost(t))).passed
        done += 1
    assert done >= 10


# orientation ---------------------------------------------------------------

def test_orient_already_standard(pair_ab):
    op = orient_pair_standard(*pair_ab)
    assert (op.inverted_first, op.inverted_second) == (False, False)


def test_orient_restores_inverted_input(pair_ab):
    A, B = pair_ab
    op = orient_pair_standard(inverse(A), B)
    # the tie-break tries "invert the second" before "invert the first";
    # (A^-1, B^-1) is already standard, so the second is flipped
    assert (op.inverted_first, op.inverted_second) == (False, True)
    att_a, _ = fixed_points(op.A)
    att_b, _ = fixed_points(op.B)
    assert reals([att_a, att_b]) == pytest.approx([-3.0, 3.0])
    # the other valid restoration gives the same classicality verdict
    assert lemma3_classical_test(op).classical == lemma3_classical_test(pair_ab).classical


def test_orient_wrong_case():
    with pytest.raises(WrongCase):
        orient_pair_standard(DIAG2, boost(1.2))
    with pytest.raises(DegeneratePair):
        orient_pair_standard(DIAG2, compose(DIAG2, DIAG2))


# classicality on a disjoint pair --------------------------------------------

def test_disjoint_classical_pair(pair_ab):
    v = lemma3_classical_test(pair_ab)
    assert v.classical
    A, B = pair_ab
    o = oracles.fixed_points(oracles.mul(oracles.inv(B.entries), A.entries))
    assert reals(v.fixed_points) == pytest.approx(sorted(o), abs=1e-9)
    assert reals(v.fixed_points) == pytest.approx([-3.040957526900427, 3.040957526900427], abs=1e-9)
    assert reals(v.fixed_points)[1] ** 2 == pytest.approx(444.015 / 48.015, rel=1e-9)


def test_disjoint_nonclassical_pair(pair_a_ab):
    v = lemma3_classical_test(pair_a_ab)
    assert not v.classical
    assert reals(v.fixed_points) == pytest.approx([1.0, 3.0], abs=1e-6)


def test_disjoint_jointly_inverted(pair_ab):
    A, B = pair_ab
    v = lemma3_classical_test((inverse(A), inverse(B)))
    assert v.classical
    assert reals(v.fixed_points) == pytest.approx([-0.98653137, 0.98653137], abs=1e-8)
    assert reals(v.fixed_points)[1] ** 2 == pytest.approx(144.045 / 148.005, rel=1e-9)


def test_disjoint_not_hyperbolic_test_element():
    # B = A P^-1 with P parabolic, so B^-1 A = P
    A = build_hyperbolic(-3, -1, 2 * math.log(10))
    P = conjugate(MoebiusMap(1, 2, 0, 1), MoebiusMap(1, 0, 1, 1))
    B = compose(A, inverse(P))
    assert pair_case(A, B) is PairCase.DISJOINT
    with pytest.raises(TestElementNotHyperbolic) as info:
        lemma3_classical_test((A, B))
    assert info.value.kind is Kind.PARABOLIC


def test_disjoint_build_circles(pair_ab):
    sys = lemma3_build_circles(pair_ab)
    assert len(sys.circles) == 4 and verify_classical(sys).passed


def test_disjoint_build_refuses_nonclassical(pair_a_ab):
    with pytest.raises(WrongCase):
        lemma3_build_circles(pair_a_ab)


def _random_disjoint_pairs(n, seed):
    rng = np.random.default_rng(seed)
    out = []
    for M in random_maps(rng, n, scale=1.5):
        t1, t2 = rng.uniform(2 * math.log(4), 2 * math.log(20), 2)
        A = conjugate(M, build_hyperbolic(-3, -1, t1))
        B = conjugate(M, build_hyperbolic(3, 1, t2))
        out.append((A, B))
    return out


def test_disjoint_constructive_random():
    for A, B in _random_disjoint_pairs(30, 21):
        assert lemma3_classical_test((A, B)).classical
        assert verify_classical(lemma3_build_circles((A, B))).passed


def test_disjoint_orientation_robust():
    for A, B in _random_disjoint_pairs(20, 4):
        for X, Y in ((A, B), (inverse(A), inverse(B)), (B, A), (inverse(A), B)):
            assert lemma3_classical_test((X, Y)).classical


# separation certificate ----------------------------------------------------

def test_separation_certificate(pair_ab, pair_a_ab):
    A, AB = pair_a_ab
    cert = theorem4_separation_certificate(A, AB)
    assert cert is not None
    assert cert.labeling.swapped  # first := AB, second := A
    assert cert.first.isclose(AB) and cert.second.isclose(A)
    assert cert.separation_point.to_real() == pytest.approx(oracles.moebius(A.entries, 3.0), abs=1e-9)
    assert cert.separation_point.to_real() == pytest.approx(-0.98658, abs=1e-4)
    assert theorem4_separation_certificate(*pair_ab) is None
    with pytest.raises(WrongCase):
        theorem4_separation_certificate(DIAG2, boost(1.2))


def test_classicality_separation_consistency():
    """Empirical check on Schottky pairs reached by Nielsen moves.

    The classicality test failing without a separation certificate is reported as a
    warning, never asserted away.
    """
    moves = nielsen_moves(2)
    seen = 0
    for base in _random_disjoint_pairs(10, 99):
        for mv in moves:
            pair = apply_move(base, mv)
            try:
                if pair_case(*pair) is not PairCase.DISJOINT:
                    continue
                classical = lemma3_classical_test(pair).classical
            except (TestElementNotHyperbolic, NotHyperbolic):
                continue
            cert = theorem4_separation_certificate(*pair)
            seen += 1
            if classical:
                assert cert is None
            elif cert is None:
                warnings.warn(f"classicality test fails without a separation certificate: {pair}")
    assert seen > 50
