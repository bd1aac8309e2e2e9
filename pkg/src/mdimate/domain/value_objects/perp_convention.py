"""Phase convention for orthogonal qubit states"""

from enum import StrEnum


class PerpConvention(StrEnum):
    """|ψ⊥⟩ = c·(conj(b)|0⟩ − conj(a)|1⟩) for |ψ⟩ = a|0⟩ + b|1⟩"""

    PLUS = "plus"
    MINUS = "minus"
    PLUS_I = "plus_i"
    MINUS_I = "minus_i"

    def phase(self) -> complex:
        return {
            PerpConvention.PLUS: 1.0 + 0j,
            PerpConvention.MINUS: -1.0 + 0j,
            PerpConvention.PLUS_I: 1j,
            PerpConvention.MINUS_I: -1j,
        }[self]
