"""Kraus channel entities"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from mdimate.core.tensor import ComplexMatrix, as_complex_matrix, hermitian_eigenvalues, kron
from mdimate.core.tolerances import KRAUS_COMPLETENESS_TOL, PSD_TOL
from mdimate.exceptions import ChannelContractError, DimensionError


def _frozen_list(kraus: Sequence[npt.ArrayLike]) -> tuple[ComplexMatrix, ...]:
    frozen = []
    for k in kraus:
        m = np.array(as_complex_matrix(k), copy=True)
        m.flags.writeable = False
        frozen.append(m)
    return tuple(frozen)


@dataclass(frozen=True, eq=False)
class ChannelCertificate:
    """Outcome of the CPTP checks on one channel."""
    name: str
    completeness_deviation: float
    choi_min_eigenvalue: float
    passed: bool


@dataclass(frozen=True, eq=False)
class KrausChannel:
    """CPTP map ρ ↦ Σ M ρ M† given by Kraus operators of shape (d_out, d_in).

    Raises:
        DimensionError: If a Kraus operator has the wrong shape
        ChannelContractError: If Σ M†M deviates from the identity beyond 1e-10
    """
    kraus: tuple[ComplexMatrix, ...]
    d_in: int
    d_out: int
    name: str = field(default="channel")

    def __post_init__(self) -> None:
        kraus = _frozen_list(self.kraus)
        if not kraus:
            raise ChannelContractError("A channel needs at least one Kraus operator")
        for k in kraus:
            if k.shape != (self.d_out, self.d_in):
                raise DimensionError(f"Kraus operator of shape {k.shape}, expected {(self.d_out, self.d_in)}")
        object.__setattr__(self, "kraus", kraus)
        deviation = self.completeness_deviation()
        if deviation > KRAUS_COMPLETENESS_TOL:
            raise ChannelContractError(f"{self.name}: Σ M†M deviates from identity by {deviation:.3e}")

    @classmethod
    def identity(cls, d: int) -> "KrausChannel":
        return cls((np.eye(d, dtype=np.complex128),), d, d, name="identity")

    def completeness_deviation(self) -> float:
        total = sum(k.conj().T @ k for k in self.kraus)
        return float(np.max(np.abs(total - np.eye(self.d_in))))

    def is_trace_preserving(self, tol: float = KRAUS_COMPLETENESS_TOL) -> bool:
        return self.completeness_deviation() <= tol

    def apply(self, rho: npt.ArrayLike) -> ComplexMatrix:
        rho = as_complex_matrix(rho)
        if rho.shape != (self.d_in, self.d_in):
            raise DimensionError(f"{self.name} expects a {self.d_in}-dim input, got shape {rho.shape}")
        return sum(k @ rho @ k.conj().T for k in self.kraus)

    def choi(self) -> ComplexMatrix:
        """Σ_ij |i⟩⟨j| ⊗ Λ(|i⟩⟨j|), PSD iff the map is completely positive."""
        d_in, d_out = self.d_in, self.d_out
        choi = np.zeros((d_in * d_out, d_in * d_out), dtype=np.complex128)
        for i in range(d_in):
            for j in range(d_in):
                unit = np.zeros((d_in, d_in), dtype=np.complex128)
                unit[i, j] = 1.0
                choi += np.kron(unit, self.apply(unit))
        return choi

    def certify(self) -> ChannelCertificate:
        deviation = self.completeness_deviation()
        smallest = float(hermitian_eigenvalues(self.choi())[0])
        passed = deviation <= KRAUS_COMPLETENESS_TOL and smallest >= -PSD_TOL
        return ChannelCertificate(self.name, deviation, smallest, passed)

    def tensor(self, other: "KrausChannel") -> "KrausChannel":
        """Local product channel self ⊗ other."""
        kraus = [kron(a, b) for a in self.kraus for b in other.kraus]
        return KrausChannel(
            tuple(kraus), self.d_in * other.d_in, self.d_out * other.d_out, name=f"{self.name}⊗{other.name}"
        )

    def adjoint(self) -> "AdjointMap":
        return AdjointMap(self.kraus, self.d_in, self.d_out, name=f"{self.name}⁺")


@dataclass(frozen=True, eq=False)
class AdjointMap:
    """Heisenberg-picture map O ↦ Σ M† O M; unital when the source channel is trace preserving."""
    kraus: tuple[ComplexMatrix, ...]
    d_in: int
    d_out: int
    name: str = field(default="adjoint")

    def apply(self, observable: npt.ArrayLike) -> ComplexMatrix:
        o = as_complex_matrix(observable)
        if o.shape != (self.d_out, self.d_out):
            raise DimensionError(f"{self.name} expects a {self.d_out}-dim operator, got shape {o.shape}")
        return sum(k.conj().T @ o @ k for k in self.kraus)

    def unitality_deviation(self) -> float:
        return float(np.max(np.abs(self.apply(np.eye(self.d_out)) - np.eye(self.d_in))))
