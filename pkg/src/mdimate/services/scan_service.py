"""Two-parameter threshold scans."""

import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from loguru import logger
from neopipe import Err, Ok, Result

from mdimate.core.thresholds import closed_form_threshold, numeric_threshold
from mdimate.domain.value_objects import ThresholdMethod
from mdimate.exceptions import MdiMateError, ScanConfigError
from mdimate.models.scan import ScanConfig, ScanProvenance, ScanResult
from mdimate.services.factory import ServiceFactoryABC
from mdimate.utils.settings import ScanSettings, settings_factory


class ScanService(ServiceFactoryABC["ScanService"]):
    """Evaluates v* over a ScanConfig grid and writes the CSV."""

    def __init__(self, settings: ScanSettings | None = None):
        self.settings = settings or settings_factory.create_scan_settings()

    @classmethod
    def create_default(cls) -> "ScanService":
        return cls()

    @classmethod
    def from_env_file(cls, env_path: str | Path) -> "ScanService":
        return cls(ScanSettings.from_env_file(env_path))

    def _row(self, config: ScanConfig, value1: float, axis2: list[float]) -> list[float]:
        """v* per cell, inf where no Werner state is detected."""
        convention = config.convention()
        row = []
        for value2 in axis2:
            noise = config.noise_at(value1, value2)
            if config.method == ThresholdMethod.NUMERIC:
                result = numeric_threshold(noise)
            else:
                result = closed_form_threshold(noise, convention)
            row.append(result.v_star if result.detectable else math.inf)
        logger.debug(f"{config.axis1.name}={value1:.6g}: {sum(v <= 1 for v in row)}/{len(row)} detectable cells")
        return row

    def evaluate(self, config: ScanConfig) -> ScanResult:
        """Fill the grid; rows come back in axis1 order regardless of worker scheduling."""
        axis1, axis2 = config.axis1.values(), config.axis2.values()
        logger.info(
            f"Scanning {config.noise_kind} over {config.axis1.name}x{config.axis2.name} "
            f"({len(axis1)}x{len(axis2)}, {config.method}, workers={self.settings.workers})"
        )
        if self.settings.workers > 1:
            with ThreadPoolExecutor(max_workers=self.settings.workers) as pool:
                grid = list(pool.map(lambda v: self._row(config, v, axis2), axis1))
        else:
            grid = [self._row(config, v, axis2) for v in axis1]

        return ScanResult(
            axis1_name=config.axis1.name,
            axis2_name=config.axis2.name,
            axis1_values=axis1,
            axis2_values=axis2,
            grid=grid,
            provenance=ScanProvenance(config=config.model_dump(mode="json"), seed=config.seed),
        )

    def run(self, config: ScanConfig, output_path: str | Path | None = None) -> Result[ScanResult, dict[str, Any]]:
        """Evaluate and, when a destination is known, write the CSV and sidecar.

        Returns:
            Ok(ScanResult), or Err with ``error`` and the offending ``field``
        """
        destination = output_path or config.output_path
        try:
            result = self.evaluate(config)
        except ScanConfigError as e:
            logger.error(f"Scan configuration error: {e}")
            return Err({"error": str(e), "field": e.field, "kind": "config"})
        except MdiMateError as e:
            logger.error(f"Scan failed: {e}")
            return Err({"error": str(e), "field": None, "kind": "numeric"})

        if destination is not None:
            try:
                result.to_csv(destination, digits=self.settings.significant_digits)
            except OSError as e:
                return Err({"error": str(e), "field": "output_path", "kind": "io", "path": str(destination)})
        return Ok(result)
