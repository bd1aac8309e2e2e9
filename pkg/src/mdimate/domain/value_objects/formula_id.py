"""Threshold formula tag"""

from enum import StrEnum


class FormulaId(StrEnum):
    """Which formula produced a threshold"""

    WHITE_NOISE = "white_noise"
    ADMIXTURE = "admixture"
    PAULI_SAME = "pauli_same"
    PAULI_DIFFERENT = "pauli_different"
    AMPLITUDE_DAMPING = "amplitude_damping"
    MEMORY = "memory"
    NUMERIC = "numeric"

    def is_closed_form(self) -> bool:
        return self != FormulaId.NUMERIC
