"""Tests for the semi-quantum game engine."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mdimate.core.game import (
    bell_projector_setup,
    effective_povm,
    joint_prob,
    mdi_value,
    mdi_value_fast,
    modified_witness,
    noisy_mdi_value,
)
from mdimate.core.sampling import make_rng, random_povm_element, random_separable_state, random_state
from mdimate.core.states import maximally_mixed, product_state, werner_state
from mdimate.core.tensor import DimFactorization, kron
from mdimate.core.witnesses import expectation
from mdimate.domain.entities import DensityMatrix, GameSetup, PovmElement, WitnessDecomposition
from mdimate.domain.value_objects import Side
from mdimate.exceptions import ArgumentError, DimensionError
from mdimate.models.noise import AmplitudeDamping, IdentityNoise, NonUniformExample1, WhiteNoise


def random_two_qubit_state(seed: int) -> DensityMatrix:
    return DensityMatrix(random_state(4, make_rng(seed)).op, DimFactorization((2, 2)))


def random_separable_game(werner, seed: int) -> GameSetup:
    rng = make_rng(seed)
    shared = random_separable_state(2, 2, rng)
    alice = random_povm_element(4, rng, dims=(2, 2))
    bob = random_povm_element(4, rng, dims=(2, 2))
    return GameSetup(werner, shared, alice, bob)


@pytest.mark.parametrize("v", [k / 10 for k in range(11)])
def test_werner_value(werner, v):
    assert mdi_value(bell_projector_setup(werner, werner_state(v))) == pytest.approx((1 - 3 * v) / 16, abs=1e-10)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000))
def test_full_game_matches_fast_oracle(werner, seed):
    rho = random_two_qubit_state(seed)
    assert abs(mdi_value(bell_projector_setup(werner, rho)) - mdi_value_fast(werner, rho)) < 1e-10


@settings(max_examples=30, deadline=None)
@given(seed=st.integers(min_value=0, max_value=100_000))
def test_separable_states_never_detected(werner, seed):
    assert mdi_value(random_separable_game(werner, seed)) >= -1e-9


def test_joint_prob_is_a_probability(werner):
    setup = bell_projector_setup(werner, werner_state(0.7))
    for s, t in werner.index_pairs():
        assert 0.0 <= joint_prob(setup, s, t) <= 1.0


def test_joint_prob_rejects_bad_index(werner):
    setup = bell_projector_setup(werner, werner_state(0.5))
    with pytest.raises(ArgumentError):
        joint_prob(setup, 4, 0)


def test_fast_oracle_checks_dimensions(werner):
    with pytest.raises(DimensionError):
        mdi_value_fast(werner, maximally_mixed(2))


def test_bell_setup_needs_matching_dimensions(werner):
    rho = DensityMatrix(np.eye(6) / 6, DimFactorization((2, 3)))
    with pytest.raises(DimensionError):
        bell_projector_setup(werner, rho)


def test_identity_noise_leaves_the_value_unchanged(werner):
    setup = bell_projector_setup(werner, werner_state(0.6))
    assert noisy_mdi_value(setup, IdentityNoise()) == pytest.approx(mdi_value(setup), abs=1e-12)


@pytest.mark.parametrize("p1,p2,v", [(1.0, 1.0, 0.5), (0.8, 0.6, 0.9), (0.3, 0.2, 1.0)])
def test_white_noise_value(werner, p1, p2, v):
    value = noisy_mdi_value(bell_projector_setup(werner, werner_state(v)), WhiteNoise(p1=p1, p2=p2))
    assert value == pytest.approx((1 - 3 * v * p1 * p2) / 16, abs=1e-12)


@pytest.mark.parametrize("noise", [WhiteNoise(p1=0.7, p2=0.4), AmplitudeDamping(eps1=0.3, eps2=0.6)])
def test_modified_witness_reproduces_noisy_value(werner, noise):
    w_prime = modified_witness(werner, noise)
    for seed in range(5):
        rho = random_two_qubit_state(seed)
        noisy = noisy_mdi_value(bell_projector_setup(werner, rho), noise)
        assert noisy == pytest.approx(expectation(w_prime, rho) / 4, abs=1e-10)


def test_modified_witness_needs_uniform_noise(werner):
    with pytest.raises(ArgumentError):
        modified_witness(werner, NonUniformExample1(q=0.5, theta=(0.0, 0.0, 1.0)))


def test_effective_povm_reproduces_probabilities(werner):
    rng = make_rng(99)
    sigma_a = random_state(2, rng)
    sigma_b = random_state(2, rng)
    alice = random_povm_element(4, rng, dims=(2, 2))
    bob = random_povm_element(4, rng, dims=(2, 2))
    setup = GameSetup(werner, product_state(sigma_a, sigma_b), alice, bob)

    alice_eff = effective_povm(alice, sigma_a, Side.ALICE)
    bob_eff = effective_povm(bob, sigma_b, Side.BOB)
    for s, t in werner.index_pairs():
        expected = np.trace(kron(alice_eff.op, bob_eff.op) @ kron(werner.tau[s].op, werner.omega[t].op)).real
        assert joint_prob(setup, s, t) == pytest.approx(expected, abs=1e-12)


def test_noise_needs_qubit_inputs():
    qutrit = maximally_mixed(3)
    decomp = WitnessDecomposition(np.ones((1, 1)), (qutrit,), (qutrit,))
    shared = DensityMatrix(np.eye(9) / 9, DimFactorization((3, 3)))
    element = PovmElement(np.eye(9) / 2, DimFactorization((3, 3)))
    setup = GameSetup(decomp, shared, element, element)
    with pytest.raises(DimensionError):
        noisy_mdi_value(setup, WhiteNoise(p1=0.5, p2=0.5))
