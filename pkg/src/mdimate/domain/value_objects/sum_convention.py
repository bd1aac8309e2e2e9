"""Pair-sum convention for the correlated Pauli threshold"""

from collections.abc import Sequence
from enum import StrEnum


class SumConvention(StrEnum):
    """How Σ p_i p_j ranges over index pairs"""

    ALL_PAIRS = "all-pairs"
    OFF_DIAGONAL = "off-diagonal"
    UNORDERED_PAIRS = "unordered-pairs"

    def pair_sum(self, probs: Sequence[float]) -> float:
        total = sum(probs)
        squares = sum(p * p for p in probs)
        if self == SumConvention.ALL_PAIRS:
            return total * total
        off_diagonal = total * total - squares
        if self == SumConvention.OFF_DIAGONAL:
            return off_diagonal
        return off_diagonal / 2
