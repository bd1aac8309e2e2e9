"""Witness operator and semi-quantum decomposition entities"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from mdimate.core.tensor import ComplexMatrix, DimFactorization, as_complex_matrix, kron
from mdimate.core.tolerances import HERMITIAN_TOL
from mdimate.domain.entities.density_matrix import DensityMatrix
from mdimate.exceptions import ArgumentError, ContractViolationError, DimensionError


@dataclass(frozen=True, eq=False)
class WitnessOperator:
    """Hermitian operator W on d_A ⊗ d_B."""
    op: ComplexMatrix
    dims: DimFactorization

    def __post_init__(self) -> None:
        op = as_complex_matrix(self.op)
        dims = self.dims if isinstance(self.dims, DimFactorization) else DimFactorization(tuple(self.dims))
        if len(dims) != 2:
            raise DimensionError(f"A witness acts on a bipartite space, got factors {dims.factors}")
        if op.shape != (dims.total, dims.total):
            raise DimensionError(f"Witness of shape {op.shape} does not match factorization {dims.factors}")
        deviation = float(np.max(np.abs(op - op.conj().T)))
        if deviation > HERMITIAN_TOL:
            raise ContractViolationError(f"Witness is not Hermitian (deviation {deviation:.3e})")
        op = np.array(op, copy=True)
        op.flags.writeable = False
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "dims", dims)


@dataclass(frozen=True, eq=False)
class WitnessDecomposition:
    """Coefficients β[s, t] and input families {τ_s}, {ω_t} with W = Σ β τ_sᵀ ⊗ ω_tᵀ.

    The families are stored untransposed; transposes are applied when the
    operator is reconstructed or evaluated.
    """
    beta: npt.NDArray[np.float64]
    tau: tuple[DensityMatrix, ...]
    omega: tuple[DensityMatrix, ...]

    def __post_init__(self) -> None:
        beta = np.array(self.beta, dtype=float, copy=True)
        tau = tuple(self.tau)
        omega = tuple(self.omega)
        if beta.ndim != 2:
            raise ArgumentError(f"beta must be a matrix, got shape {beta.shape}")
        if not tau or not omega:
            raise ArgumentError("Both input families must be nonempty")
        if beta.shape != (len(tau), len(omega)):
            raise ArgumentError(f"beta shape {beta.shape} does not match families ({len(tau)}, {len(omega)})")
        if not np.all(np.isfinite(beta)):
            raise ArgumentError("beta entries must be finite")
        if len({state.dim for state in tau}) != 1 or len({state.dim for state in omega}) != 1:
            raise DimensionError("All states of a family must share one dimension")
        beta.flags.writeable = False
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "omega", omega)

    @property
    def d_a(self) -> int:
        return self.tau[0].dim

    @property
    def d_b(self) -> int:
        return self.omega[0].dim

    @property
    def dims(self) -> DimFactorization:
        return DimFactorization((self.d_a, self.d_b))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.tau), len(self.omega)

    def index_pairs(self) -> list[tuple[int, int]]:
        rows, cols = self.shape
        return [(s, t) for s in range(rows) for t in range(cols)]

    def reconstruct(self) -> ComplexMatrix:
        """Σ_{s,t} β[s, t] · τ_sᵀ ⊗ ω_tᵀ."""
        total = np.zeros((self.d_a * self.d_b,) * 2, dtype=np.complex128)
        for s, t in self.index_pairs():
            coefficient = self.beta[s, t]
            if coefficient != 0.0:
                total += coefficient * kron(self.tau[s].op.T, self.omega[t].op.T)
        return total

    def sum_beta_tau(self) -> ComplexMatrix:
        """Σ_{s,t} β[s, t] τ_s."""
        weights = self.beta.sum(axis=1)
        return sum((w * state.op for w, state in zip(weights, self.tau)), np.zeros((self.d_a,) * 2, complex))

    def sum_beta_omega(self) -> ComplexMatrix:
        """Σ_{s,t} β[s, t] ω_t."""
        weights = self.beta.sum(axis=0)
        return sum((w * state.op for w, state in zip(weights, self.omega)), np.zeros((self.d_b,) * 2, complex))

    def perturbed(self, s: int, t: int, delta: float) -> "WitnessDecomposition":
        """Copy with β[s, t] shifted by ``delta``."""
        beta = np.array(self.beta, copy=True)
        beta[s, t] += delta
        return WitnessDecomposition(beta, self.tau, self.omega)
