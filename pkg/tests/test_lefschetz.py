import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dillab.errors import (
    DomainError,
    FixedPointOnCircle,
    GenusMismatch,
    NotPairwiseOrthogonal,
)
from dillab.lefschetz import (
    HomologyClass,
    LinearPlaneMap,
    SectorRotation,
    SympAction,
    linear_index_oracle,
    local_index,
    multitwist_action,
    multitwist_lefschetz,
    symp_form,
    transvection,
)


def test_homology_class_basics():
    a1 = HomologyClass.alpha(1, 2)
    b1 = HomologyClass.beta(1, 2)
    assert a1.coords == (1, 0, 0, 0)
    assert b1.coords == (0, 0, 1, 0)
    assert a1.g == 2
    assert HomologyClass.zero(3).is_zero
    with pytest.raises(ValueError):
        HomologyClass((1, 0, 0))
    with pytest.raises(ValueError):
        HomologyClass.alpha(3, 2)


def test_symp_form_dual_basis():
    g = 3
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            ai = HomologyClass.alpha(i, g)
            bj = HomologyClass.beta(j, g)
            assert symp_form(ai, bj) == (1 if i == j else 0)
            assert symp_form(bj, ai) == (-1 if i == j else 0)
            assert symp_form(ai, HomologyClass.alpha(j, g)) == 0
    with pytest.raises(GenusMismatch):
        symp_form(HomologyClass.alpha(1, 1), HomologyClass.alpha(1, 2))


def test_symp_form_antisymmetry_sample():
    u = HomologyClass((2, -1, 3, 5))
    v = HomologyClass((0, 4, -2, 1))
    assert symp_form(u, v) == -symp_form(v, u)
    assert symp_form(u, u) == 0


def test_symp_action_certifies_itself():
    with pytest.raises(ValueError):
        SympAction(1, ((2, 0), (0, 2)))
    ident = SympAction.identity(2)
    assert ident.trace == 4
    assert ident.apply(HomologyClass((1, 2, 3, 4))).coords == (1, 2, 3, 4)


def test_transvection_hand_computed():
    # twist about a_1 to the power 3 at genus 2: b_1 -> b_1 - 3 a_1,
    # everything else fixed
    t = transvection(HomologyClass.alpha(1, 2), 3)
    a1 = HomologyClass.alpha(1, 2)
    b1 = HomologyClass.beta(1, 2)
    assert t.apply(a1) == a1
    assert t.apply(b1).coords == (-3, 0, 1, 0)
    assert t.apply(HomologyClass.alpha(2, 2)) == HomologyClass.alpha(2, 2)
    assert t.apply(HomologyClass.beta(2, 2)) == HomologyClass.beta(2, 2)
    assert t.trace == 4


def test_transvection_zero_class_and_power():
    z = transvection(HomologyClass.zero(2), 5)
    assert z.matrix == SympAction.identity(2).matrix
    p0 = transvection(HomologyClass.alpha(1, 2), 0)
    assert p0.matrix == SympAction.identity(2).matrix


def test_transvection_inverse():
    gamma = HomologyClass((1, 2, 0, -1))
    prod = transvection(gamma, 4) @ transvection(gamma, -4)
    assert prod.matrix == SympAction.identity(2).matrix


def test_multitwist_trace_and_lefschetz():
    g = 2
    twists = [
        (HomologyClass.alpha(1, g), 3),
        (HomologyClass.alpha(2, g), -2),
    ]
    action = multitwist_action(twists, g)
    assert action.trace == 2 * g
    assert multitwist_lefschetz(twists, g) == 2 - 2 * g
    # zero class in the system changes nothing
    with_zero = twists + [(HomologyClass.zero(g), 7)]
    assert multitwist_lefschetz(with_zero, g) == 2 - 2 * g


def test_multitwist_order_of_factors_irrelevant():
    g = 3
    twists = [
        (HomologyClass.alpha(1, g), 2),
        (HomologyClass.alpha(2, g), -1),
        (HomologyClass.alpha(3, g), 5),
    ]
    a = multitwist_action(twists, g)
    b = multitwist_action(list(reversed(twists)), g)
    assert a.matrix == b.matrix


def test_multitwist_rejects_crossing_classes():
    g = 1
    crossing = [
        (HomologyClass.alpha(1, g), 1),
        (HomologyClass.beta(1, g), 1),
    ]
    with pytest.raises(NotPairwiseOrthogonal):
        multitwist_action(crossing, g)
    with pytest.raises(DomainError):
        multitwist_action([(HomologyClass.alpha(1, 1), 0)], 1)
    with pytest.raises(GenusMismatch):
        multitwist_action([(HomologyClass.alpha(1, 2), 1)], 1)


def test_local_index_battery():
    expanding = LinearPlaneMap(2.0, 0.0, 0.0, 3.0)
    rotation = SectorRotation(1, 6)
    saddle = LinearPlaneMap(2.0, 0.0, 0.0, 0.5)
    for radius in (0.5, 1.0, 2.0):
        assert local_index(expanding, radius=radius) == 1
        assert local_index(rotation, radius=radius) == 1
        assert local_index(saddle, radius=radius) == -1


def test_local_index_matches_linear_oracle():
    cases = [
        LinearPlaneMap(2.0, 1.0, 0.0, 3.0),
        LinearPlaneMap(0.5, 0.25, -0.25, 0.5),
        LinearPlaneMap(-1.0, 0.0, 0.0, -1.0),
        LinearPlaneMap(3.0, 2.0, 2.0, 0.25),
    ]
    for m in cases:
        assert abs(m.det_minus_identity()) > 1e-3
        assert local_index(m) == linear_index_oracle(m)


def test_local_index_identity_rotation_has_no_vector_field():
    with pytest.raises(FixedPointOnCircle):
        local_index(SectorRotation(0, 1))
    with pytest.raises(FixedPointOnCircle):
        local_index(SectorRotation(6, 6))


def test_local_index_argument_validation():
    with pytest.raises(DomainError):
        local_index(SectorRotation(1, 6), samples=2)
    with pytest.raises(DomainError):
        local_index(SectorRotation(1, 6), radius=0.0)


coords4 = st.tuples(*[st.integers(min_value=-4, max_value=4)] * 4)


@given(coords4, st.integers(min_value=-5, max_value=5).filter(lambda p: p != 0))
@settings(max_examples=80, deadline=None)
def test_transvection_always_symplectic(coords, power):
    # SympAction's constructor verifies A^T J A = J and raises otherwise
    t = transvection(HomologyClass(coords), power)
    assert t.g == 2


@given(coords4, coords4)
@settings(max_examples=60, deadline=None)
def test_transvection_preserves_form(u, v):
    gamma = HomologyClass((1, -2, 3, 0))
    t = transvection(gamma, 2)
    hu, hv = HomologyClass(u), HomologyClass(v)
    assert symp_form(t.apply(hu), t.apply(hv)) == symp_form(hu, hv)
