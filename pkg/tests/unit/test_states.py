"""Tests for state constructors, entities and predicates."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mdimate.core.sampling import make_rng, random_separable_state
from mdimate.core.states import (
    IDENTITY_2,
    SIGMA_Z,
    bloch_state,
    bloch_vector,
    dominant_vector,
    is_ppt,
    max_entangled,
    maximally_mixed,
    pauli,
    pure_state,
    purity,
    random_density,
    singlet,
    werner_state,
)
from mdimate.core.tensor import DimFactorization
from mdimate.domain.entities import BlochVector, DensityMatrix, PovmElement
from mdimate.exceptions import ArgumentError, ContractViolationError, DimensionError, NumericContractError


def test_bloch_round_trip():
    n = BlochVector(0.3, -0.4, 0.5)
    recovered = bloch_vector(bloch_state(n))
    assert recovered.as_tuple() == pytest.approx(n.as_tuple(), abs=1e-12)


def test_bloch_vector_outside_ball_is_rejected():
    with pytest.raises(ArgumentError):
        BlochVector(1.0, 1.0, 0.0)


def test_pure_bloch_state_has_unit_purity():
    rho = bloch_state(BlochVector.from_angles(1.1, 2.3))
    assert purity(rho) == pytest.approx(1.0, abs=1e-12)
    assert rho.is_pure()


def test_maximally_mixed_purity():
    assert purity(maximally_mixed(4)) == pytest.approx(0.25)


def test_pure_state_normalizes():
    rho = pure_state([1.0, 1.0])
    np.testing.assert_allclose(rho.op, np.full((2, 2), 0.5))
    with pytest.raises(ArgumentError):
        pure_state([0.0, 0.0])


def test_singlet_is_pure_and_entangled():
    rho = singlet()
    assert rho.is_pure()
    verdict = is_ppt(rho)
    assert not verdict.is_ppt
    assert verdict.min_eigenvalue == pytest.approx(-0.5, abs=1e-12)


def test_max_entangled_overlap_with_singlet_is_zero():
    assert max_entangled(2).expectation(singlet().op) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ArgumentError):
        max_entangled(1)


@pytest.mark.parametrize("v", [0.0, 0.2, 1 / 3 - 1e-6, 0.5, 0.9, 1.0])
def test_werner_ppt_boundary(v):
    verdict = is_ppt(werner_state(v))
    assert verdict.min_eigenvalue == pytest.approx((1 - 3 * v) / 4, abs=1e-12)
    assert verdict.is_ppt == (v <= 1 / 3)


def test_werner_parameter_range():
    with pytest.raises(ArgumentError):
        werner_state(1.5)


@settings(max_examples=25, deadline=None)
@given(
    polar=st.floats(min_value=0.0, max_value=math.pi),
    azimuth=st.floats(min_value=0.0, max_value=2 * math.pi),
    radius=st.floats(min_value=0.0, max_value=1.0),
)
def test_antipodal_bloch_states_sum_to_identity(polar, azimuth, radius):
    n = radius * np.array(BlochVector.from_angles(polar, azimuth).as_tuple())
    np.testing.assert_allclose(bloch_state(-n).op, IDENTITY_2 - bloch_state(n).op, atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(v=st.floats(min_value=0.0, max_value=1.0))
def test_werner_state_is_linear_in_visibility(v):
    expected = v * werner_state(1.0).op + (1 - v) * werner_state(0.0).op
    np.testing.assert_allclose(werner_state(v).op, expected, atol=1e-12)
    np.testing.assert_allclose(werner_state(v).op, v * singlet().op + (1 - v) * np.eye(4) / 4, atol=1e-12)


def test_is_ppt_needs_small_bipartite_state():
    with pytest.raises(DimensionError):
        is_ppt(maximally_mixed(4))


def test_random_separable_states_are_ppt():
    for seed in range(20):
        assert is_ppt(random_separable_state(2, 2, make_rng(seed))).is_ppt


def test_random_density_is_reproducible():
    a = random_density(3, 42)
    b = random_density(3, 42)
    np.testing.assert_array_equal(a.op, b.op)
    with pytest.raises(ArgumentError):
        random_density(9, 0)


def test_pauli_index_range():
    np.testing.assert_array_equal(pauli(0), IDENTITY_2)
    np.testing.assert_array_equal(pauli(3), SIGMA_Z)
    with pytest.raises(ArgumentError):
        pauli(4)


def test_dominant_vector_phase_is_fixed():
    psi = np.array([1j, 1.0]) / math.sqrt(2)
    vector = dominant_vector(pure_state(psi))
    assert vector[0].imag == pytest.approx(0.0, abs=1e-12)
    assert vector[0].real > 0
    assert abs(np.vdot(vector, psi)) == pytest.approx(1.0, abs=1e-12)
    with pytest.raises(ArgumentError):
        dominant_vector(maximally_mixed(2))


def test_density_matrix_contract():
    with pytest.raises(ContractViolationError):
        DensityMatrix(np.eye(2), DimFactorization((2,)))
    with pytest.raises(ContractViolationError):
        DensityMatrix(np.diag([1.5, -0.5]), DimFactorization((2,)))
    with pytest.raises(DimensionError):
        DensityMatrix(np.eye(4) / 4, DimFactorization((2, 3)))


def test_density_matrix_is_immutable():
    rho = maximally_mixed(2)
    with pytest.raises(ValueError):
        rho.op[0, 0] = 1.0


def test_povm_element_bounds():
    element = PovmElement.from_operator(np.diag([0.2, 1.0]))
    np.testing.assert_allclose(element.complement().op, np.diag([0.8, 0.0]))
    with pytest.raises(NumericContractError):
        PovmElement.from_operator(np.diag([1.5, 0.0]))
