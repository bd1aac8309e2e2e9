"""Tests for the Werner witness and its decomposition."""

import numpy as np
import pytest

from mdimate.core.states import maximally_mixed, werner_state
from mdimate.core.witnesses import (
    expectation,
    verify_decomposition,
    werner_decomposition,
    werner_inputs,
    werner_witness,
    witness_from_decomposition,
)
from mdimate.domain.entities import WitnessDecomposition
from mdimate.exceptions import ArgumentError, DimensionError


def test_decomposition_reconstructs_the_witness(werner):
    assert verify_decomposition(werner, werner_witness()) < 1e-10


def test_inputs_are_pure_qubit_states():
    inputs = werner_inputs()
    assert len(inputs) == 4
    assert all(state.is_pure() for state in inputs)


@pytest.mark.parametrize("v", [k / 10 for k in range(11)])
def test_werner_expectation(v):
    assert expectation(werner_witness(), werner_state(v)) == pytest.approx((1 - 3 * v) / 4, abs=1e-12)


def test_marginal_sums_are_half_identity(werner):
    np.testing.assert_allclose(werner.sum_beta_tau(), np.eye(2) / 2, atol=1e-12)
    np.testing.assert_allclose(werner.sum_beta_omega(), np.eye(2) / 2, atol=1e-12)


def test_beta_sums_to_one(werner):
    assert werner.beta.sum() == pytest.approx(1.0)


def test_perturbation_breaks_reconstruction(werner):
    broken = werner.perturbed(0, 0, 1e-3)
    assert broken.beta[0, 0] == pytest.approx(5 / 8 + 1e-3)
    assert werner.beta[0, 0] == pytest.approx(5 / 8)
    assert verify_decomposition(broken, werner_witness()) > 1e-5


def test_witness_from_decomposition_is_hermitian(werner):
    w = witness_from_decomposition(werner)
    np.testing.assert_allclose(w.op, w.op.conj().T)


def test_decomposition_shape_is_checked(werner):
    with pytest.raises(ArgumentError):
        WitnessDecomposition(np.ones((3, 4)), werner.tau, werner.omega)


def test_expectation_dimension_mismatch():
    with pytest.raises(DimensionError):
        expectation(werner_witness(), maximally_mixed(2))
