"""Werner witness and its semi-quantum decomposition."""

import math

import numpy as np

from mdimate.core.states import SINGLET_VECTOR, bloch_state, pauli
from mdimate.core.tensor import DimFactorization, max_entry_distance, trace_product
from mdimate.core.tolerances import IMAGINARY_RESIDUE_TOL
from mdimate.domain.entities import DensityMatrix, WitnessDecomposition, WitnessOperator
from mdimate.exceptions import ArgumentError, DimensionError, NumericContractError

WERNER_AXIS = (1 / math.sqrt(3), 1 / math.sqrt(3), 1 / math.sqrt(3))
DIAGONAL_BETA = 5 / 8
OFF_DIAGONAL_BETA = -1 / 8


def werner_witness() -> WitnessOperator:
    """W = I₄/2 − |Ψ⁻⟩⟨Ψ⁻|."""
    op = np.eye(4, dtype=np.complex128) / 2 - np.outer(SINGLET_VECTOR, SINGLET_VECTOR.conj())
    return WitnessOperator(op, DimFactorization((2, 2)))


def werner_inputs() -> tuple[DensityMatrix, ...]:
    """τ_s = σ_s ρ_n σ_s for s = 0..3 with n = (1,1,1)/√3."""
    root = bloch_state(WERNER_AXIS)
    return tuple(
        DensityMatrix(pauli(s) @ root.op @ pauli(s), DimFactorization((2,))) for s in range(4)
    )


def werner_decomposition() -> WitnessDecomposition:
    """β = 5/8 on the diagonal and −1/8 elsewhere, with ω_t = τ_t."""
    beta = np.full((4, 4), OFF_DIAGONAL_BETA)
    np.fill_diagonal(beta, DIAGONAL_BETA)
    inputs = werner_inputs()
    return WitnessDecomposition(beta, inputs, inputs)


def expectation(w: WitnessOperator, rho: DensityMatrix) -> float:
    """Tr(W ρ).

    Raises:
        DimensionError: If the operators act on different spaces
        NumericContractError: If the imaginary residue exceeds 1e-8
    """
    if w.op.shape != rho.op.shape:
        raise DimensionError(f"Witness of shape {w.op.shape} cannot be evaluated on a state of shape {rho.op.shape}")
    value = trace_product(w.op, rho.op)
    if abs(value.imag) > IMAGINARY_RESIDUE_TOL:
        raise NumericContractError(f"Witness expectation has imaginary residue {value.imag:.3e}")
    return value.real


def verify_decomposition(d: WitnessDecomposition, w: WitnessOperator) -> float:
    """Max entry distance between Σ β τᵀ ⊗ ωᵀ and W; 1e-10 is the passing threshold.

    Raises:
        ArgumentError: If the decomposition and the operator have different shapes
    """
    reconstructed = d.reconstruct()
    if reconstructed.shape != w.op.shape:
        raise ArgumentError(f"Decomposition reconstructs a {reconstructed.shape} operator, witness is {w.op.shape}")
    return max_entry_distance(reconstructed, w.op)


def witness_from_decomposition(d: WitnessDecomposition) -> WitnessOperator:
    return WitnessOperator(d.reconstruct(), d.dims)
