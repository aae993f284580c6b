import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import hyperbolic_maps, maps
from fuchsian_schottky import (
    IDENTITY,
    INF,
    BoundaryPoint,
    Kind,
    MoebiusMap,
    apply_boundary,
    chordal,
    classify,
    compose,
    compose_all,
    conjugate,
    fixed_points,
    inverse,
    normalize,
    rotation,
    signed_commutator_trace,
    tolerance,
    translation_length,
)
from fuchsian_schottky.errors import MarginalTrace, NonOrientable, NotHyperbolic

HYP = MoebiusMap(2.0, 0.0, 0.0, 0.5)
SHEAR = MoebiusMap(1.0, 1.0, 0.0, 1.0)
B53 = MoebiusMap(5 / 3, 4 / 3, 4 / 3, 5 / 3)


def entries_close(T, expected, tol=1e-9):
    return all(abs(x - y) <= tol for x, y in zip(T.entries, expected))


# normalize -----------------------------------------------------------------

def test_normalize_scalar_identity():
    assert entries_close(normalize([[2, 0], [0, 2]]), (1, 0, 0, 1))


def test_normalize_scales_by_root_det():
    assert entries_close(normalize([[4, 0], [0, 1]]), (2, 0, 0, 0.5))


def test_normalize_rejects_orientation_reversing():
    with pytest.raises(NonOrientable):
        normalize([[1, 1], [0, -1]])


def test_normalize_input_shapes_agree():
    flat = normalize((3, 1, 2, 1))
    assert normalize([[3, 1], [2, 1]]) == flat
    assert normalize({"a": 3, "b": 1, "c": 2, "d": 1}) == flat


@pytest.mark.parametrize("raw, expected", [
    ((-2, 0, 0, -0.5), (2, 0, 0, 0.5)),          # negative trace flips
    ((0, -1, 1, 0), (0, 1, -1, 0)),              # trace 0: first nonzero of a, b, c positive
    ((0, 1, -1, 0), (0, 1, -1, 0)),
])
def test_canonical_sign(raw, expected):
    assert entries_close(normalize(raw), expected)


# compose / inverse ---------------------------------------------------------

def test_compose_identity_and_inverse():
    assert compose(IDENTITY, B53) == B53
    assert compose(B53, inverse(B53)) == IDENTITY


def test_compose_derived_example():
    expected = oracles.mul((2, 0, 0, 0.5), (5 / 3, 4 / 3, 4 / 3, 5 / 3))
    assert entries_close(compose(HYP, B53), expected)
    assert entries_close(compose(HYP, B53), (10 / 3, 8 / 3, 2 / 3, 5 / 6))


@pytest.mark.parametrize("T, expected", [
    (IDENTITY, (1, 0, 0, 1)),
    (HYP, (0.5, 0, 0, 2)),
    (SHEAR, (1, -1, 0, 1)),
])
def test_inverse_examples(T, expected):
    assert entries_close(inverse(T), expected)


def test_operators():
    assert (HYP @ B53) == compose(HYP, B53)
    assert ~HYP == inverse(HYP)
    assert HYP(1.0) == 4.0


# apply_boundary ------------------------------------------------------------

def test_apply_boundary_examples():
    assert apply_boundary(HYP, INF).is_infinite
    assert apply_boundary(HYP, BoundaryPoint.from_real(1.0)).to_real() == pytest.approx(4.0)
    assert apply_boundary(MoebiusMap(0, -1, 1, 0), BoundaryPoint.from_real(0.0)).is_infinite


# classify / fixed points / length ------------------------------------------

@pytest.mark.parametrize("T, kind", [
    (HYP, Kind.HYPERBOLIC),
    (SHEAR, Kind.PARABOLIC),
    (rotation(math.pi / 4), Kind.ELLIPTIC),
    (IDENTITY, Kind.IDENTITY),
])
def test_classify(T, kind):
    assert classify(T) is kind


def test_rotation_trace_sqrt2():
    assert rotation(math.pi / 4).trace == pytest.approx(math.sqrt(2))


def _with_trace(tr):
    # [[tr - 1, 1], [tr - 2, 1]] has determinant 1 and trace tr
    return MoebiusMap(tr - 1.0, 1.0, tr - 2.0, 1.0)


def test_near_parabolic_classifies_parabolic():
    assert classify(_with_trace(2.0 + 5e-10)) is Kind.PARABOLIC
    assert classify(_with_trace(2.0 + 5e-9)) is Kind.HYPERBOLIC
    with pytest.raises(MarginalTrace):
        classify(_with_trace(2.0 + 5e-9), strict=True)


@pytest.mark.parametrize("m", [(2, 0, 0, 0.5), (5 / 3, 4 / 3, 4 / 3, 5 / 3), (-4.85, -14.85, 4.95, 14.95)])
def test_fixed_points_against_oracle(m):
    att, rep = fixed_points(normalize(m))
    o_att, o_rep = oracles.fixed_points(m)
    for got, want in ((att, o_att), (rep, o_rep)):
        if want is None:
            assert got.is_infinite
        else:
            assert got.to_real() == pytest.approx(want, abs=1e-9)


def test_fixed_points_examples():
    att, rep = fixed_points(B53)
    assert (att.to_real(), rep.to_real()) == pytest.approx((1.0, -1.0))
    att, rep = fixed_points(normalize((-4.85, -14.85, 4.95, 14.95)))
    assert (att.to_real(), rep.to_real()) == pytest.approx((-1.0, -3.0))
    with pytest.raises(NotHyperbolic):
        fixed_points(SHEAR)


def test_translation_length_examples():
    assert translation_length(HYP) == pytest.approx(2 * math.log(2))
    assert translation_length(B53) == pytest.approx(2 * math.log(3))
    with pytest.raises(NotHyperbolic):
        translation_length(SHEAR)


def test_tolerance_context_is_scoped():
    T = _with_trace(2.0 + 1e-7)
    assert classify(T) is Kind.HYPERBOLIC
    with tolerance(1e-5):
        assert classify(T) is Kind.PARABOLIC
    assert classify(T) is Kind.HYPERBOLIC


# properties ----------------------------------------------------------------

@given(maps(), maps())
def test_determinant_one_after_compose(S, T):
    assert abs(compose(S, T).det - 1.0) <= 1e-8


@given(maps(), maps())
def test_sign_coherence(S, T):
    assert compose_all(S, T, inverse(T), inverse(S)) == IDENTITY


@given(maps(), maps())
def test_trace_conjugation_invariance(G, T):
    got = conjugate(G, T).trace
    assert abs(got - T.trace) <= 1e-8 * max(1.0, T.trace * max(abs(e) for e in G.entries) ** 4)


@given(maps(), maps())
def test_commutator_sign_independent_of_representative(A, B):
    ref = signed_commutator_trace(A, B)
    neg = lambda T: tuple(-e for e in T.entries)
    for a in (A.entries, neg(A)):
        for b in (B.entries, neg(B)):
            assert signed_commutator_trace(a, b) == pytest.approx(ref, abs=1e-9 * max(1.0, abs(ref)))


@given(hyperbolic_maps())
def test_fixed_points_are_fixed(T):
    att, rep = fixed_points(T)
    assert chordal(apply_boundary(T, att), att) <= 1e-8
    assert chordal(apply_boundary(T, rep), rep) <= 1e-8


@given(st.floats(0.2, 10.0))
def test_translation_length_matches_oracle(t):
    T = normalize((math.exp(t / 2), 0, 0, math.exp(-t / 2)))
    assert translation_length(T) == pytest.approx(oracles.translation_length(T.entries), rel=1e-9)
    assert translation_length(T) == pytest.approx(t, rel=1e-9)


def test_hash_disabled_key_available():
    with pytest.raises(TypeError):
        hash(HYP)
    assert HYP.key() == (2.0, 0.0, 0.0, 0.5)


def test_isclose_relative():
    big = normalize((1e6, 0, 0, 1e-6))
    nudged = MoebiusMap(1e6 * (1 + 1e-12), 0.0, 0.0, 1e-6)
    assert big == nudged
    assert not np.isclose(big.a, 1.0)
