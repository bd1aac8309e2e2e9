"""Value objects"""

from mdimate.domain.value_objects.formula_id import FormulaId
from mdimate.domain.value_objects.index_set import IndexSet
from mdimate.domain.value_objects.noise_kind import NoiseKind
from mdimate.domain.value_objects.perp_convention import PerpConvention
from mdimate.domain.value_objects.scan_kind import ScanKind
from mdimate.domain.value_objects.side import Side
from mdimate.domain.value_objects.sum_convention import SumConvention
from mdimate.domain.value_objects.threshold_method import ThresholdMethod

__all__ = [
    "FormulaId",
    "IndexSet",
    "NoiseKind",
    "PerpConvention",
    "ScanKind",
    "Side",
    "SumConvention",
    "ThresholdMethod",
]
