"""
Dense complex matrix algebra on small tensor-product spaces.

Subsystem ordering is big-endian: for factors (d0, d1, ..., dk) the composite
index is i0*d1*...*dk + ... + ik, i.e. the first factor varies slowest. Every
reshape below relies on that convention, matching numpy.kron.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import prod

import numpy as np
import numpy.typing as npt

from mdimate.core.eigen import jacobi_eigenvalues
from mdimate.core.tolerances import HERMITIAN_TOL
from mdimate.exceptions import ArgumentError, ContractViolationError, DimensionError, SizeLimitError
from mdimate.utils.settings.factory import get_numerics_settings

ComplexMatrix = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]


@dataclass(frozen=True)
class DimFactorization:
    """Ordered subsystem dimensions of a composite space."""
    factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(f) for f in self.factors)
        if not factors:
            raise DimensionError("A factorization needs at least one factor")
        if len(factors) == 1 and factors[0] < 1:
            raise DimensionError(f"Dimension must be positive, got {factors[0]}")
        if len(factors) > 1 and any(f < 2 for f in factors):
            raise DimensionError(f"Every factor of a composite space must be >= 2, got {factors}")
        object.__setattr__(self, "factors", factors)

    @classmethod
    def of(cls, *factors: int) -> "DimFactorization":
        return cls(tuple(factors))

    @property
    def total(self) -> int:
        return prod(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def subsystem(self, keep: Iterable[int]) -> "DimFactorization":
        return DimFactorization(tuple(self.factors[i] for i in sorted(set(keep))))


def as_complex_matrix(data: npt.ArrayLike) -> ComplexMatrix:
    """Coerce to a finite 2-D complex128 array."""
    m = np.asarray(data, dtype=np.complex128)
    if m.ndim != 2:
        raise DimensionError(f"Expected a 2-D matrix, got shape {m.shape}")
    if m.size == 0:
        raise DimensionError("Empty matrix")
    if not np.all(np.isfinite(m)):
        raise ArgumentError("Matrix entries must be finite")
    return m


def _require_square(m: ComplexMatrix) -> int:
    rows, cols = m.shape
    if rows != cols:
        raise DimensionError(f"Expected a square matrix, got {rows}x{cols}")
    return rows


def _coerce_dims(dims: DimFactorization | Sequence[int]) -> DimFactorization:
    return dims if isinstance(dims, DimFactorization) else DimFactorization(tuple(dims))


def kron(a: npt.ArrayLike, b: npt.ArrayLike, *, cap: int | None = None) -> ComplexMatrix:
    """Kronecker product a ⊗ b.

    Args:
        a: Left factor
        b: Right factor
        cap: Largest allowed row/column count of the result; defaults to
            ``NumericsSettings.dimension_cap``

    Raises:
        SizeLimitError: If the product exceeds the cap
    """
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    limit = get_numerics_settings().dimension_cap if cap is None else cap
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    if max(rows, cols) > limit:
        raise SizeLimitError(f"Tensor product of size {rows}x{cols} exceeds the dimension cap {limit}")
    return np.kron(a, b)


def kron_all(*ops: npt.ArrayLike, cap: int | None = None) -> ComplexMatrix:
    """Left-to-right Kronecker product of several operators."""
    if not ops:
        raise ArgumentError("kron_all needs at least one operator")
    result = as_complex_matrix(ops[0])
    for op in ops[1:]:
        result = kron(result, op, cap=cap)
    return result


def dagger(m: npt.ArrayLike) -> ComplexMatrix:
    return np.conj(as_complex_matrix(m)).T


def is_hermitian(m: npt.ArrayLike, tol: float = HERMITIAN_TOL) -> bool:
    m = as_complex_matrix(m)
    if m.shape[0] != m.shape[1]:
        return False
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def max_entry_distance(a: npt.ArrayLike, b: npt.ArrayLike) -> float:
    a = as_complex_matrix(a)
    b = as_complex_matrix(b)
    if a.shape != b.shape:
        raise ArgumentError(f"Shape mismatch: {a.shape} vs {b.shape}")
    return float(np.max(np.abs(a - b)))


def trace_product(a: ComplexMatrix, b: ComplexMatrix) -> complex:
    """Tr(a @ b) without forming the product."""
    return complex(np.einsum("ij,ji->", a, b))


def partial_trace(m: npt.ArrayLike, dims: DimFactorization | Sequence[int], keep: Iterable[int]) -> ComplexMatrix:
    """Trace out every subsystem not listed in ``keep``.

    Args:
        m: Square operator on the composite space
        dims: Subsystem factorization of ``m``
        keep: Indices of the subsystems to keep, returned in their original order

    Returns:
        The reduced operator on the kept subsystems

    Raises:
        DimensionError: If ``dims.total`` does not match ``m``
        ArgumentError: If ``keep`` is empty or holds an invalid index
    """
    m = as_complex_matrix(m)
    dims = _coerce_dims(dims)
    size = _require_square(m)
    if size != dims.total:
        raise DimensionError(f"Operator of size {size} does not match factorization {dims.factors}")

    n = len(dims)
    kept = sorted(set(keep))
    if not kept:
        raise ArgumentError("partial_trace needs a nonempty keep set")
    if kept[0] < 0 or kept[-1] >= n:
        raise ArgumentError(f"keep indices {kept} out of range for {n} subsystems")

    traced = [i for i in range(n) if i not in kept]
    tensor = m.reshape(dims.factors * 2)
    # Descending order keeps the lower axis numbers valid after each contraction.
    for removed, axis in enumerate(reversed(traced)):
        remaining = n - removed
        tensor = np.trace(tensor, axis1=axis, axis2=axis + remaining)

    kept_dim = prod(dims.factors[i] for i in kept)
    return tensor.reshape(kept_dim, kept_dim)


def partial_transpose(m: npt.ArrayLike, dims: DimFactorization | Sequence[int], subsystem: int) -> ComplexMatrix:
    """Transpose the row/column indices of one subsystem.

    Raises:
        DimensionError: If ``dims.total`` does not match ``m``
        ArgumentError: If ``subsystem`` is not a valid index
    """
    m = as_complex_matrix(m)
    dims = _coerce_dims(dims)
    size = _require_square(m)
    if size != dims.total:
        raise DimensionError(f"Operator of size {size} does not match factorization {dims.factors}")
    n = len(dims)
    if not 0 <= subsystem < n:
        raise ArgumentError(f"Subsystem {subsystem} out of range for {n} subsystems")

    axes = list(range(2 * n))
    axes[subsystem], axes[subsystem + n] = axes[subsystem + n], axes[subsystem]
    return m.reshape(dims.factors * 2).transpose(axes).reshape(size, size)


def permute_subsystems(
    m: npt.ArrayLike, dims: DimFactorization | Sequence[int], order: Sequence[int]
) -> ComplexMatrix:
    """Reorder tensor factors: factor ``k`` of the result is factor ``order[k]`` of ``m``."""
    m = as_complex_matrix(m)
    dims = _coerce_dims(dims)
    size = _require_square(m)
    if size != dims.total:
        raise DimensionError(f"Operator of size {size} does not match factorization {dims.factors}")
    n = len(dims)
    if sorted(order) != list(range(n)):
        raise ArgumentError(f"{list(order)} is not a permutation of {n} subsystems")

    axes = list(order) + [n + k for k in order]
    return m.reshape(dims.factors * 2).transpose(axes).reshape(size, size)


def hermitian_eigenvalues(m: npt.ArrayLike, *, solver: str | None = None) -> RealVector:
    """All eigenvalues of a Hermitian matrix, ascending.

    The input is symmetrized as (m + m†)/2 before solving.

    Args:
        m: Square matrix, Hermitian within 1e-10 (max entry)
        solver: "lapack" or "jacobi"; defaults to ``NumericsSettings.eigen_solver``

    Raises:
        ContractViolationError: If ``m`` is not Hermitian within tolerance
    """
    m = as_complex_matrix(m)
    _require_square(m)
    deviation = float(np.max(np.abs(m - m.conj().T)))
    if deviation > HERMITIAN_TOL:
        raise ContractViolationError(f"Matrix is not Hermitian (max deviation {deviation:.3e})")

    h = (m + m.conj().T) / 2
    settings = get_numerics_settings()
    chosen = solver or settings.eigen_solver
    if chosen == "jacobi":
        return jacobi_eigenvalues(
            h, tolerance=settings.jacobi_tolerance, max_sweeps=settings.jacobi_max_sweeps
        )
    if chosen == "lapack":
        return np.linalg.eigvalsh(h)
    raise ArgumentError(f"Unknown eigensolver {chosen!r}")
