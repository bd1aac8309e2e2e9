"""Scan kind value object"""

from enum import StrEnum


class ScanKind(StrEnum):
    """Two-parameter threshold families swept by the scan command"""

    WHITE_NOISE = "white_noise"
    ADMIXTURE_MIN = "admixture_min"
    ADMIXTURE_MAX = "admixture_max"
    PAULI_SAME = "pauli_same"
    PAULI_DIFFERENT = "pauli_different"
    AMPLITUDE_DAMPING = "amplitude_damping"
    CORRELATED_PAULI = "correlated_pauli"

    def axis_names(self) -> tuple[str, str]:
        """Parameters that may be swept"""
        if self == ScanKind.AMPLITUDE_DAMPING:
            return "eps1", "eps2"
        if self == ScanKind.CORRELATED_PAULI:
            return "m", "p1"
        return "p1", "p2"

    def fixed_names(self) -> tuple[str, ...]:
        """Parameters that may only be held fixed"""
        return {
            ScanKind.PAULI_SAME: ("axis",),
            ScanKind.PAULI_DIFFERENT: ("i", "j"),
            ScanKind.CORRELATED_PAULI: ("convention",),
        }.get(self, ())
