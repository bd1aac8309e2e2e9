"""Noise kind value object"""

from enum import StrEnum


class NoiseKind(StrEnum):
    """Families of noise acting on the quantum inputs"""

    IDENTITY = "identity"
    WHITE_NOISE = "white_noise"
    ADMIXTURE = "admixture"
    PAULI_FLIP = "pauli_flip"
    AMPLITUDE_DAMPING = "amplitude_damping"
    CORRELATED_PAULI = "correlated_pauli"
    NON_UNIFORM_EXAMPLE1 = "non_uniform_example1"
    ENTANGLING_EXAMPLE2 = "entangling_example2"

    def is_uniform(self) -> bool:
        """Same channel for every (s, t) input pair"""
        return self not in (NoiseKind.NON_UNIFORM_EXAMPLE1, NoiseKind.ENTANGLING_EXAMPLE2)
