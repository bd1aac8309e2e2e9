"""POVM element entity"""

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from mdimate.core.tensor import ComplexMatrix, DimFactorization, as_complex_matrix, hermitian_eigenvalues
from mdimate.core.tolerances import HERMITIAN_TOL, PSD_TOL
from mdimate.exceptions import DimensionError, NumericContractError


@dataclass(frozen=True, eq=False)
class PovmElement:
    """Outcome operator E with 0 <= E <= I; the complementary outcome is I - E."""
    op: ComplexMatrix
    dims: DimFactorization

    def __post_init__(self) -> None:
        op = as_complex_matrix(self.op)
        dims = self.dims if isinstance(self.dims, DimFactorization) else DimFactorization(tuple(self.dims))
        if op.shape[0] != op.shape[1] or op.shape[0] != dims.total:
            raise DimensionError(f"POVM element of shape {op.shape} does not match factorization {dims.factors}")
        deviation = float(np.max(np.abs(op - op.conj().T)))
        if deviation > HERMITIAN_TOL:
            raise NumericContractError(f"POVM element is not Hermitian (deviation {deviation:.3e})")
        spectrum = hermitian_eigenvalues(op)
        if spectrum[0] < -PSD_TOL or spectrum[-1] > 1.0 + PSD_TOL:
            raise NumericContractError(
                f"POVM element spectrum [{spectrum[0]:.3e}, {spectrum[-1]:.12g}] leaves [0, 1]"
            )
        op = np.array(op, copy=True)
        op.flags.writeable = False
        object.__setattr__(self, "op", op)
        object.__setattr__(self, "dims", dims)

    @classmethod
    def from_operator(cls, op: npt.ArrayLike, dims: tuple[int, ...] | None = None) -> "PovmElement":
        m = as_complex_matrix(op)
        return cls(m, DimFactorization(dims or (m.shape[0],)))

    @property
    def dim(self) -> int:
        return self.dims.total

    def complement(self) -> "PovmElement":
        return PovmElement(np.eye(self.dim, dtype=np.complex128) - self.op, self.dims)
