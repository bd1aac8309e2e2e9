"""Tests for the tensor-product algebra."""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from mdimate.core.sampling import make_rng, random_hermitian, random_state
from mdimate.core.states import singlet
from mdimate.core.tensor import (
    DimFactorization,
    hermitian_eigenvalues,
    is_hermitian,
    kron,
    kron_all,
    max_entry_distance,
    partial_trace,
    partial_transpose,
    permute_subsystems,
)
from mdimate.exceptions import ArgumentError, ContractViolationError, DimensionError, SizeLimitError
from mdimate.utils.settings import get_numerics_settings


def test_kron_matches_numpy(rng):
    a = random_hermitian(2, rng)
    b = random_hermitian(3, rng)
    np.testing.assert_allclose(kron(a, b), np.kron(a, b))


def test_kron_respects_dimension_cap():
    with pytest.raises(SizeLimitError):
        kron(np.eye(8), np.eye(16), cap=64)


def test_kron_all_rejects_empty_input():
    with pytest.raises(ArgumentError):
        kron_all()


def test_factorization_rejects_trivial_factors():
    with pytest.raises(DimensionError):
        DimFactorization((2, 1))
    assert DimFactorization.of(2, 3).total == 6


def test_partial_trace_of_product(rng):
    a = random_state(2, rng).op
    b = random_state(3, rng).op
    joint = kron(a, b)
    np.testing.assert_allclose(partial_trace(joint, (2, 3), {0}), a, atol=1e-12)
    np.testing.assert_allclose(partial_trace(joint, (2, 3), {1}), b, atol=1e-12)


def test_partial_trace_three_parties(rng):
    a, b, c = (random_state(2, rng).op for _ in range(3))
    joint = kron_all(a, b, c)
    np.testing.assert_allclose(partial_trace(joint, (2, 2, 2), {0, 2}), kron(a, c), atol=1e-12)


def test_partial_trace_errors():
    with pytest.raises(DimensionError):
        partial_trace(np.eye(4), (2, 3), {0})
    with pytest.raises(ArgumentError):
        partial_trace(np.eye(4), (2, 2), set())
    with pytest.raises(ArgumentError):
        partial_trace(np.eye(4), (2, 2), {2})


def test_partial_transpose_of_singlet_has_negative_eigenvalue():
    pt = partial_transpose(singlet().op, (2, 2), 1)
    eigenvalues = hermitian_eigenvalues(pt)
    assert eigenvalues[0] == pytest.approx(-0.5, abs=1e-12)


def test_partial_transpose_is_an_involution(rng):
    m = random_hermitian(6, rng)
    twice = partial_transpose(partial_transpose(m, (2, 3), 0), (2, 3), 0)
    assert max_entry_distance(twice, m) < 1e-14


def test_permute_subsystems_reorders_factors(rng):
    a = random_hermitian(2, rng)
    b = random_hermitian(3, rng)
    c = random_hermitian(2, rng)
    permuted = permute_subsystems(kron_all(a, b, c), (2, 3, 2), (2, 0, 1))
    np.testing.assert_allclose(permuted, kron_all(c, a, b), atol=1e-12)


def test_permute_subsystems_rejects_non_permutation():
    with pytest.raises(ArgumentError):
        permute_subsystems(np.eye(4), (2, 2), (0, 0))


def test_is_hermitian():
    assert is_hermitian(np.array([[1, 1j], [-1j, 2]]))
    assert not is_hermitian(np.array([[1, 1], [0, 1]]))


def test_hermitian_eigenvalues_rejects_non_hermitian():
    with pytest.raises(ContractViolationError):
        hermitian_eigenvalues(np.array([[0, 1], [0, 0]]))


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000), d=st.integers(min_value=2, max_value=16))
def test_solvers_agree(seed, d):
    m = random_hermitian(d, make_rng(seed))
    lapack = hermitian_eigenvalues(m, solver="lapack")
    jacobi = hermitian_eigenvalues(m, solver="jacobi")
    assert np.max(np.abs(lapack - jacobi)) < 1e-10


@settings(max_examples=25, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000), d=st.integers(min_value=1, max_value=3))
def test_kron_is_associative(seed, d):
    rng = make_rng(seed)
    a, b, c = (random_hermitian(d, rng) for _ in range(3))
    np.testing.assert_allclose(kron(kron(a, b), c), kron(a, kron(b, c)), atol=1e-12)


@settings(max_examples=25, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=10_000),
    da=st.integers(min_value=1, max_value=4),
    db=st.integers(min_value=1, max_value=4),
)
def test_kron_trace_factorizes(seed, da, db):
    rng = make_rng(seed)
    a = random_hermitian(da, rng)
    b = random_hermitian(db, rng)
    assert np.trace(kron(a, b)) == pytest.approx(np.trace(a) * np.trace(b), abs=1e-10)


def test_solver_follows_settings(monkeypatch, rng):
    monkeypatch.setenv("MDI_NUMERICS_EIGEN_SOLVER", "jacobi")
    get_numerics_settings.cache_clear()
    assert get_numerics_settings().eigen_solver == "jacobi"
    m = random_hermitian(4, rng)
    np.testing.assert_allclose(hermitian_eigenvalues(m), np.linalg.eigvalsh(m), atol=1e-10)
