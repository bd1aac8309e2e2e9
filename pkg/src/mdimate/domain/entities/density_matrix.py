"""Density matrix entity"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from mdimate.core.tensor import (
    ComplexMatrix,
    DimFactorization,
    as_complex_matrix,
    hermitian_eigenvalues,
    trace_product,
)
from mdimate.core.tolerances import HERMITIAN_TOL, IMAGINARY_RESIDUE_TOL, PSD_TOL, TRACE_TOL
from mdimate.exceptions import ContractViolationError, DimensionError, NumericContractError


def _freeze(m: ComplexMatrix) -> ComplexMatrix:
    m = np.array(m, dtype=np.complex128, copy=True)
    m.flags.writeable = False
    return m


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator with a subsystem factorization.

    Raises:
        DimensionError: If the factorization does not match the operator size
        ContractViolationError: If Hermiticity, trace or positivity fail beyond tolerance
    """
    op: ComplexMatrix
    dims: DimFactorization

    def __post_init__(self) -> None:
        op = as_complex_matrix(self.op)
        dims = self.dims if isinstance(self.dims, DimFactorization) else DimFactorization(tuple(self.dims))
        if op.shape[0] != op.shape[1] or op.shape[0] != dims.total:
            raise DimensionError(f"Operator of shape {op.shape} does not match factorization {dims.factors}")

        deviation = float(np.max(np.abs(op - op.conj().T)))
        if deviation > HERMITIAN_TOL:
            raise ContractViolationError(f"Density matrix is not Hermitian (deviation {deviation:.3e})")
        trace = np.trace(op)
        if abs(trace - 1.0) > TRACE_TOL:
            raise ContractViolationError(f"Density matrix trace {trace.real:.12g} is not 1")
        smallest = float(hermitian_eigenvalues(op)[0])
        if smallest < -PSD_TOL:
            raise ContractViolationError(f"Density matrix has negative eigenvalue {smallest:.3e}")

        object.__setattr__(self, "op", _freeze(op))
        object.__setattr__(self, "dims", dims)

    @classmethod
    def from_operator(cls, op: npt.ArrayLike, dims: Sequence[int] | DimFactorization | None = None) -> "DensityMatrix":
        m = as_complex_matrix(op)
        factorization = DimFactorization((m.shape[0],)) if dims is None else dims
        return cls(m, factorization)  # type: ignore[arg-type]

    @property
    def dim(self) -> int:
        return self.dims.total

    def purity(self) -> float:
        return float(trace_product(self.op, self.op).real)

    def is_pure(self, tol: float = 1e-10) -> bool:
        return abs(self.purity() - 1.0) <= tol

    def transpose(self) -> "DensityMatrix":
        return DensityMatrix(self.op.T, self.dims)

    def expectation(self, observable: npt.ArrayLike) -> float:
        """Tr(O ρ) for a Hermitian observable of matching size."""
        o = as_complex_matrix(observable)
        if o.shape != self.op.shape:
            raise DimensionError(f"Observable of shape {o.shape} does not act on a {self.dim}-dim state")
        value = trace_product(o, self.op)
        if abs(value.imag) > IMAGINARY_RESIDUE_TOL:
            raise NumericContractError(f"Expectation has imaginary residue {value.imag:.3e}")
        return value.real
