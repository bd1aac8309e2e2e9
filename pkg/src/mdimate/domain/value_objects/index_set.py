"""Pauli index set value object"""

from enum import StrEnum


class IndexSet(StrEnum):
    """Pauli indices a correlated channel draws from"""

    PAULI = "pauli"
    FULL = "full"

    def indices(self) -> tuple[int, ...]:
        return (1, 2, 3) if self == IndexSet.PAULI else (0, 1, 2, 3)
