"""Closed-form versus numeric threshold queries."""

from collections.abc import Mapping, Sequence
from typing import Any

from loguru import logger
from neopipe import Err, Ok, Result
from pydantic import ValidationError

from mdimate.core.thresholds import compare_thresholds, memory_convention_report
from mdimate.core.tolerances import THRESHOLD_AGREEMENT_TOL
from mdimate.domain.value_objects import IndexSet, ScanKind, SumConvention
from mdimate.exceptions import ArgumentError, MdiMateError, ScanConfigError
from mdimate.models.noise import NoiseSpec
from mdimate.models.scan import noise_for
from mdimate.models.threshold import MemoryConventionRow, ThresholdComparison
from mdimate.services.factory import ServiceFactoryABC


class ThresholdService(ServiceFactoryABC["ThresholdService"]):
    """Answers the threshold command."""

    def __init__(self, tolerance: float = THRESHOLD_AGREEMENT_TOL):
        self.tolerance = tolerance

    @classmethod
    def create_default(cls) -> "ThresholdService":
        return cls()

    def compare(
        self, noise: NoiseSpec, convention: SumConvention = SumConvention.UNORDERED_PAIRS
    ) -> Result[ThresholdComparison, dict[str, Any]]:
        """Both thresholds side by side.

        Returns:
            Ok when they agree within tolerance; Err carrying the comparison
            under ``comparison`` when they do not, or ``error`` on failure
        """
        try:
            comparison = compare_thresholds(noise, convention, self.tolerance)
        except MdiMateError as e:
            logger.error(f"Threshold evaluation failed for {noise.noise_kind}: {e}")
            return Err({"error": str(e), "kind": "config" if isinstance(e, (ScanConfigError, ValueError)) else "numeric"})

        if not comparison.agree:
            logger.error(
                f"{noise.noise_kind}: closed form {comparison.closed_form.v_star:.12g} vs "
                f"numeric {comparison.numeric.v_star:.12g}"
            )
            return Err({"comparison": comparison, "kind": "disagreement"})
        return Ok(comparison)

    def compare_params(
        self, kind: ScanKind, params: Mapping[str, float]
    ) -> Result[ThresholdComparison, dict[str, Any]]:
        """``compare`` for a scan family given by name and parameter map."""
        try:
            noise = noise_for(kind, params)
            index = int(params.get("convention", 2))
            if not 0 <= index < len(SumConvention):
                raise ScanConfigError(f"convention index must be 0, 1 or 2, got {index}", field="convention")
        except ScanConfigError as e:
            return Err({"error": str(e), "field": e.field, "kind": "config"})
        return self.compare(noise, list(SumConvention)[index])

    def memory_conventions(
        self, m_values: Sequence[float], probs: Sequence[float], index_set: IndexSet = IndexSet.PAULI
    ) -> Result[list[MemoryConventionRow], dict[str, Any]]:
        """Which pair-sum convention reproduces the numeric memory-channel threshold."""
        try:
            rows = [row for m in m_values for row in memory_convention_report(m, probs, index_set, self.tolerance)]
        except (ArgumentError, ValidationError) as e:
            logger.error(f"Memory channel parameters rejected: {e}")
            return Err({"error": str(e), "kind": "config"})
        except MdiMateError as e:
            return Err({"error": str(e), "kind": "numeric"})
        for row in rows:
            logger.info(f"m={row.m:g} {row.convention}: {'matches' if row.matches else 'differs'}")
        return Ok(rows)
