"""Bloch vector value object"""

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from mdimate.core.tolerances import BLOCH_TOL
from mdimate.exceptions import ArgumentError


@dataclass(frozen=True)
class BlochVector:
    """Qubit Bloch vector (n1, n2, n3) with |n| <= 1."""
    n1: float
    n2: float
    n3: float

    def __post_init__(self) -> None:
        for name in ("n1", "n2", "n3"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ArgumentError(f"Bloch component {name} must be finite")
            object.__setattr__(self, name, value)
        if self.norm_squared > 1.0 + BLOCH_TOL:
            raise ArgumentError(f"Bloch vector norm {math.sqrt(self.norm_squared):.12g} exceeds 1")

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> "BlochVector":
        n1, n2, n3 = np.asarray(values, dtype=float).reshape(3)
        return cls(float(n1), float(n2), float(n3))

    @classmethod
    def from_angles(cls, polar: float, azimuth: float) -> "BlochVector":
        """Unit vector at polar angle ``polar`` from +z and azimuth ``azimuth`` from +x."""
        return cls(
            math.sin(polar) * math.cos(azimuth),
            math.sin(polar) * math.sin(azimuth),
            math.cos(polar),
        )

    @property
    def norm_squared(self) -> float:
        return self.n1 ** 2 + self.n2 ** 2 + self.n3 ** 2

    @property
    def norm(self) -> float:
        return math.sqrt(self.norm_squared)

    def is_pure(self, tol: float = 1e-10) -> bool:
        return abs(self.norm - 1.0) <= tol

    def as_array(self) -> npt.NDArray[np.float64]:
        return np.array([self.n1, self.n2, self.n3], dtype=float)

    def __neg__(self) -> "BlochVector":
        return BlochVector(-self.n1, -self.n2, -self.n3)

    def as_tuple(self) -> tuple[float, float, float]:
        return self.n1, self.n2, self.n3
