"""Constructors and predicates for the states used by the witnesses."""

import math
from collections.abc import Sequence
from typing import NamedTuple

import numpy as np
import numpy.typing as npt

from mdimate.core.sampling import make_rng, random_state
from mdimate.core.tensor import ComplexMatrix, DimFactorization, as_complex_matrix, hermitian_eigenvalues, kron, partial_transpose
from mdimate.core.tolerances import PSD_TOL, PURITY_TOL
from mdimate.domain.entities import BlochVector, DensityMatrix
from mdimate.exceptions import ArgumentError, DimensionError

IDENTITY_2 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS: tuple[ComplexMatrix, ...] = (IDENTITY_2, SIGMA_X, SIGMA_Y, SIGMA_Z)

SINGLET_VECTOR = np.array([0, 1, -1, 0], dtype=np.complex128) / math.sqrt(2)

for _matrix in PAULIS:
    _matrix.flags.writeable = False


class PptVerdict(NamedTuple):
    is_ppt: bool
    min_eigenvalue: float


def pauli(index: int) -> ComplexMatrix:
    """σ_0 = I, σ_1 = X, σ_2 = Y, σ_3 = Z."""
    if index not in range(4):
        raise ArgumentError(f"Pauli index must be in 0..3, got {index}")
    return PAULIS[index]


def _as_bloch(n: BlochVector | Sequence[float]) -> BlochVector:
    return n if isinstance(n, BlochVector) else BlochVector.from_array(n)


def bloch_state(n: BlochVector | Sequence[float]) -> DensityMatrix:
    """(I + n·σ)/2; pure iff |n| = 1.

    Raises:
        ArgumentError: If |n| > 1 beyond tolerance
    """
    n = _as_bloch(n)
    op = (IDENTITY_2 + n.n1 * SIGMA_X + n.n2 * SIGMA_Y + n.n3 * SIGMA_Z) / 2
    return DensityMatrix(op, DimFactorization((2,)))


def bloch_vector(rho: DensityMatrix) -> BlochVector:
    if rho.dim != 2:
        raise DimensionError(f"Bloch vectors describe qubits, got dimension {rho.dim}")
    return BlochVector(*(float(np.trace(rho.op @ sigma).real) for sigma in PAULIS[1:]))


def maximally_mixed(d: int) -> DensityMatrix:
    return DensityMatrix(np.eye(d, dtype=np.complex128) / d, DimFactorization((d,)))


def pure_state(vector: npt.ArrayLike, dims: Sequence[int] | None = None) -> DensityMatrix:
    """|ψ⟩⟨ψ| for a vector normalized here."""
    psi = np.asarray(vector, dtype=np.complex128).reshape(-1)
    norm = np.linalg.norm(psi)
    if norm == 0.0:
        raise ArgumentError("Cannot build a state from the zero vector")
    psi = psi / norm
    return DensityMatrix(np.outer(psi, psi.conj()), DimFactorization(tuple(dims or (psi.size,))))


def product_state(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    return DensityMatrix(kron(a.op, b.op), DimFactorization(a.dims.factors + b.dims.factors))


def purity(rho: DensityMatrix) -> float:
    return rho.purity()


def max_entangled(d: int) -> DensityMatrix:
    """|Φ⁺⟩⟨Φ⁺| with |Φ⁺⟩ = Σ_i |ii⟩/√d on d ⊗ d."""
    if d < 2:
        raise ArgumentError(f"max_entangled needs d >= 2, got {d}")
    phi = np.zeros(d * d, dtype=np.complex128)
    phi[[i * d + i for i in range(d)]] = 1.0 / math.sqrt(d)
    return DensityMatrix(np.outer(phi, phi.conj()), DimFactorization((d, d)))


def singlet() -> DensityMatrix:
    return DensityMatrix(np.outer(SINGLET_VECTOR, SINGLET_VECTOR.conj()), DimFactorization((2, 2)))


def werner_state(v: float) -> DensityMatrix:
    """v|Ψ⁻⟩⟨Ψ⁻| + (1 − v)I₄/4, entangled iff v > 1/3."""
    if not 0.0 <= v <= 1.0:
        raise ArgumentError(f"Werner parameter must lie in [0, 1], got {v}")
    op = v * np.outer(SINGLET_VECTOR, SINGLET_VECTOR.conj()) + (1.0 - v) * np.eye(4) / 4
    return DensityMatrix(op, DimFactorization((2, 2)))


def is_ppt(rho: DensityMatrix) -> PptVerdict:
    """Positive-partial-transpose test; exact separability criterion on 2⊗2 and 2⊗3.

    Raises:
        DimensionError: If the state is not on 2⊗2 or 2⊗3
    """
    if sorted(rho.dims.factors) not in ([2, 2], [2, 3]):
        raise DimensionError(f"PPT verdicts need a 2⊗2 or 2⊗3 state, got factors {rho.dims.factors}")
    smallest = float(hermitian_eigenvalues(partial_transpose(rho.op, rho.dims, 1))[0])
    return PptVerdict(smallest >= -PSD_TOL, smallest)


def random_density(d: int, seed: int) -> DensityMatrix:
    """Seeded Hilbert-Schmidt random state on dimension 2..8."""
    if not 2 <= d <= 8:
        raise ArgumentError(f"random_density supports 2 <= d <= 8, got {d}")
    return random_state(d, make_rng(seed))


def dominant_vector(rho: DensityMatrix) -> ComplexMatrix:
    """Eigenvector of the largest eigenvalue of a pure state, phase fixed.

    The first component with modulus above 1e-12 is made real and positive.

    Raises:
        ArgumentError: If ``rho`` is not pure
    """
    if abs(rho.purity() - 1.0) > PURITY_TOL:
        raise ArgumentError(f"Expected a pure state, purity is {rho.purity():.12g}")
    _, vectors = np.linalg.eigh(as_complex_matrix(rho.op))
    psi = vectors[:, -1]
    pivot = next(x for x in psi if abs(x) > 1e-12)
    return psi * (abs(pivot) / pivot)
