"""Fake-detection demonstrations behind the fake-detect command."""

from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np
from loguru import logger
from neopipe import Err, Ok, Result
from pydantic import BaseModel, Field

from mdimate.core.fake_detection import (
    example1_grid_minimum,
    example2_conventions,
    example2_game_value,
    example2_sweep,
)
from mdimate.core.tolerances import DETECTION_FLOOR, ORACLE_TOL
from mdimate.domain.value_objects import PerpConvention
from mdimate.exceptions import ArgumentError, MdiMateError
from mdimate.services.factory import ServiceFactoryABC
from mdimate.utils.settings import FakeDetectionSettings, settings_factory


class AdmixtureFinding(BaseModel):
    """Grid minimum of the non-uniform admixture value for one q."""
    q: float
    minimum: float = Field(..., description="Lowest noisy witness value found on the θ grid")
    theta: tuple[float, float, float] = Field(..., description="Bloch vector of the minimizing |θ⟩")
    expected_minimum: float = Field(..., description="−q²/8")
    grid_points: int
    detected: bool = Field(..., description="True when the minimum is below zero, i.e. a product state looks entangled")


class EntanglingFinding(BaseModel):
    """Noisy witness value of the entangling map at one p."""
    p: float
    value: float
    detected: bool


class EntanglingReport(BaseModel):
    convention: PerpConvention
    sweep: list[EntanglingFinding]
    conventions_at_zero: dict[str, float] = Field(
        ..., description="Value at p = 0 under every phase convention of the orthogonal state"
    )


class FakeDetectionService(ServiceFactoryABC["FakeDetectionService"]):
    """Shows the witness firing on a product shared state under corrupted inputs."""

    def __init__(self, polar_steps: int = 50, azimuth_steps: int = 100):
        self.polar_steps = polar_steps
        self.azimuth_steps = azimuth_steps

    @classmethod
    def from_settings(cls, settings: FakeDetectionSettings) -> "FakeDetectionService":
        return cls(polar_steps=settings.polar_steps, azimuth_steps=settings.azimuth_steps)

    @classmethod
    def create_default(cls) -> "FakeDetectionService":
        return cls.from_settings(settings_factory.create_fake_detection_settings())

    @classmethod
    def from_env_file(cls, env_path: str | Path) -> "FakeDetectionService":
        return cls.from_settings(FakeDetectionSettings.from_env_file(env_path))

    def non_uniform_admixture(
        self, qs: Sequence[float], verify_all: bool = False
    ) -> Result[list[AdmixtureFinding], dict[str, Any]]:
        findings = []
        try:
            for q in qs:
                best = example1_grid_minimum(q, self.polar_steps, self.azimuth_steps, verify_all)
                findings.append(
                    AdmixtureFinding(
                        q=q,
                        minimum=float(best.value),
                        theta=best.theta.as_tuple(),
                        expected_minimum=-q * q / 8,
                        grid_points=best.points,
                        detected=bool(best.value < -DETECTION_FLOOR),
                    )
                )
        except ArgumentError as e:
            logger.error(f"Non-uniform admixture rejected its input: {e}")
            return Err({"error": str(e), "kind": "config"})
        except MdiMateError as e:
            logger.error(f"Non-uniform admixture evaluation failed: {e}")
            return Err({"error": str(e), "kind": "numeric"})
        return Ok(findings)

    def entangling_map(
        self, ps: Sequence[float] | None = None, convention: PerpConvention = PerpConvention.PLUS
    ) -> Result[EntanglingReport, dict[str, Any]]:
        """Sweep p and tabulate the phase conventions at p = 0.

        The closed-form sum is cross-checked against the full game at every p.
        """
        ps = list(ps) if ps is not None else [float(p) for p in np.linspace(0.0, 1.0, 11)]
        try:
            sweep = example2_sweep(ps, convention)
            for p, value in sweep:
                game = example2_game_value(p, convention)
                if abs(game - value) > ORACLE_TOL:
                    return Err(
                        {"error": f"closed sum {value:.15g} and full game {game:.15g} disagree at p={p:g}", "kind": "numeric"}
                    )
            table = {str(c): v for c, v in example2_conventions(0.0).items()}
        except ArgumentError as e:
            logger.error(f"Entangling map rejected its input: {e}")
            return Err({"error": str(e), "kind": "config"})
        except MdiMateError as e:
            logger.error(f"Entangling map evaluation failed: {e}")
            return Err({"error": str(e), "kind": "numeric"})

        findings = [EntanglingFinding(p=p, value=float(v), detected=bool(v < -DETECTION_FLOOR)) for p, v in sweep]
        logger.info(f"Entangling map ({convention}): {sum(f.detected for f in findings)}/{len(findings)} detections")
        return Ok(EntanglingReport(convention=convention, sweep=findings, conventions_at_zero=table))
