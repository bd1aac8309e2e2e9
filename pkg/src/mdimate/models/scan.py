"""
Scan configuration and result grids.

A scan sweeps two parameters of a threshold family and records v* per cell.
Results are written as CSV (∞ as an empty cell) with a JSON sidecar holding
provenance.
"""

import math
from collections.abc import Mapping
from pathlib import Path
from typing import Any

import numpy as np
import polars as pl
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from mdimate import __version__
from mdimate.core.thresholds import admixture_extreme_states
from mdimate.domain.value_objects import ScanKind, SumConvention, ThresholdMethod
from mdimate.exceptions import ScanConfigError
from mdimate.models.noise import Admixture, AmplitudeDamping, CorrelatedPauli, NoiseSpec, PauliFlip, WhiteNoise
from mdimate.utils.file_utils import read_json, write_text

DEFAULT_DIGITS = 12


class ScanAxis(BaseModel):
    """One swept parameter: ``steps`` evenly spaced values over [min, max]."""

    model_config = ConfigDict(frozen=True)

    name: str
    min: float
    max: float
    steps: int = Field(..., ge=2)

    @model_validator(mode="after")
    def _check_range(self) -> "ScanAxis":
        if not self.min < self.max:
            raise ValueError(f"axis {self.name!r} needs min < max, got [{self.min}, {self.max}]")
        return self

    def values(self) -> list[float]:
        return [float(v) for v in np.linspace(self.min, self.max, self.steps)]


class ScanConfig(BaseModel):
    """What to sweep and where to write it."""

    model_config = ConfigDict(frozen=True)

    noise_kind: ScanKind
    axis1: ScanAxis
    axis2: ScanAxis
    fixed: dict[str, float] = Field(default_factory=dict, description="Parameters held constant")
    method: ThresholdMethod = Field(default=ThresholdMethod.CLOSED_FORM)
    output_path: Path | None = Field(default=None, description="CSV destination")
    seed: int = 0

    @model_validator(mode="after")
    def _check_parameters(self) -> "ScanConfig":
        allowed = set(self.noise_kind.axis_names())
        for field_name, axis in (("axis1", self.axis1), ("axis2", self.axis2)):
            if axis.name not in allowed:
                raise ValueError(f"{field_name}: {self.noise_kind} sweeps {sorted(allowed)}, not {axis.name!r}")
        if self.axis1.name == self.axis2.name:
            raise ValueError(f"axis2: both axes sweep {self.axis1.name!r}")
        unknown = set(self.fixed) - set(self.noise_kind.fixed_names())
        if unknown:
            raise ValueError(f"fixed: {self.noise_kind} has no fixed parameters {sorted(unknown)}")
        return self

    @classmethod
    def from_document(cls, data: Mapping[str, Any]) -> "ScanConfig":
        """Validate, converting pydantic errors to ScanConfigError naming the field.

        Raises:
            ScanConfigError: If the document is not a valid configuration
        """
        try:
            return cls.model_validate(dict(data))
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"]) or None
            message = str(first["msg"])
            if field is None and ":" in message:
                field = message.split(":", 1)[0].removeprefix("Value error, ")
            raise ScanConfigError(f"Invalid scan configuration: {message}", field=field) from e

    @classmethod
    def load_json(cls, file_path: str | Path) -> "ScanConfig":
        return cls.from_document(read_json(file_path))

    def convention(self) -> SumConvention:
        index = int(self.fixed.get("convention", 2))
        conventions = list(SumConvention)
        if not 0 <= index < len(conventions):
            raise ScanConfigError(f"convention index must be 0..{len(conventions) - 1}, got {index}", field="fixed")
        return conventions[index]

    def noise_at(self, value1: float, value2: float) -> NoiseSpec:
        params = dict(self.fixed)
        params[self.axis1.name] = value1
        params[self.axis2.name] = value2
        return noise_for(self.noise_kind, params)


def noise_for(kind: ScanKind, params: Mapping[str, float]) -> NoiseSpec:
    """Noise spec of a scan family at one parameter point.

    Raises:
        ScanConfigError: If a required parameter is missing or out of range
    """
    def need(name: str) -> float:
        if name not in params:
            raise ScanConfigError(f"{kind} needs parameter {name!r}", field=name)
        return float(params[name])

    try:
        match kind:
            case ScanKind.WHITE_NOISE:
                return WhiteNoise(p1=need("p1"), p2=need("p2"))
            case ScanKind.ADMIXTURE_MIN | ScanKind.ADMIXTURE_MAX:
                x, y = admixture_extreme_states("min" if kind == ScanKind.ADMIXTURE_MIN else "max")
                return Admixture.from_states(need("p1"), need("p2"), x, y)
            case ScanKind.PAULI_SAME:
                axis = int(params.get("axis", 3))
                return PauliFlip(i=axis, j=axis, p1=need("p1"), p2=need("p2"))
            case ScanKind.PAULI_DIFFERENT:
                i, j = int(params.get("i", 1)), int(params.get("j", 2))
                if i == j:
                    raise ScanConfigError(f"pauli_different needs distinct axes, got i=j={i}", field="j")
                return PauliFlip(i=i, j=j, p1=need("p1"), p2=need("p2"))
            case ScanKind.AMPLITUDE_DAMPING:
                return AmplitudeDamping(eps1=need("eps1"), eps2=need("eps2"))
            case ScanKind.CORRELATED_PAULI:
                p1 = need("p1")
                rest = (1.0 - p1) / 2
                return CorrelatedPauli(m=need("m"), probs=[p1, rest, 1.0 - p1 - rest])
    except ValidationError as e:
        first = e.errors()[0]
        raise ScanConfigError(f"{kind}: {first['msg']}", field=".".join(str(p) for p in first["loc"])) from e
    raise ScanConfigError(f"Unknown scan kind {kind!r}", field="noise_kind")


class ScanProvenance(BaseModel):
    config: dict[str, Any]
    version: str = __version__
    seed: int


class ScanResult(BaseModel):
    """v* grid with rows over axis1 and columns over axis2."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    axis1_name: str
    axis2_name: str
    axis1_values: list[float]
    axis2_values: list[float]
    grid: list[list[float]]
    provenance: ScanProvenance

    @model_validator(mode="after")
    def _check_shape(self) -> "ScanResult":
        if len(self.grid) != len(self.axis1_values):
            raise ValueError(f"grid has {len(self.grid)} rows, axis1 has {len(self.axis1_values)} steps")
        for k, row in enumerate(self.grid):
            if len(row) != len(self.axis2_values):
                raise ValueError(f"grid row {k} has {len(row)} cells, axis2 has {len(self.axis2_values)} steps")
        return self

    @property
    def corner_label(self) -> str:
        return f"{self.axis1_name}\\{self.axis2_name}"

    def to_frame(self, digits: int = DEFAULT_DIGITS) -> pl.DataFrame:
        """String frame in CSV layout; ∞ cells are null."""
        fmt = f"{{:.{digits}g}}"
        columns: dict[str, list[str | None]] = {self.corner_label: [fmt.format(v) for v in self.axis1_values]}
        for k, value in enumerate(self.axis2_values):
            columns[fmt.format(value)] = [None if math.isinf(row[k]) else fmt.format(row[k]) for row in self.grid]
        return pl.DataFrame(columns, schema={name: pl.String for name in columns})

    def to_csv_text(self, digits: int = DEFAULT_DIGITS) -> str:
        return self.to_frame(digits).write_csv(line_terminator="\n", null_value="")

    def sidecar_path(self, csv_path: str | Path) -> Path:
        return Path(csv_path).with_suffix(".provenance.json")

    def to_csv(self, file_path: str | Path, digits: int = DEFAULT_DIGITS) -> Path:
        """Write the grid and its provenance sidecar.

        Raises:
            IOError: If either file cannot be written
        """
        path = write_text(file_path, self.to_csv_text(digits))
        write_text(self.sidecar_path(path), self.provenance.model_dump_json(indent=2))
        logger.info(f"Scan {self.corner_label} ({len(self.axis1_values)}x{len(self.axis2_values)}) written to {path}")
        return path

    @classmethod
    def from_csv(cls, file_path: str | Path) -> "ScanResult":
        """Parse a CSV written by ``to_csv``; the sidecar is read when present.

        Raises:
            FileNotFoundError: If the CSV doesn't exist
        """
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"Scan CSV not found: {path}")
        frame = pl.read_csv(path, infer_schema_length=0)
        corner, *axis2_labels = frame.columns
        axis1_name, _, axis2_name = corner.partition("\\")

        sidecar = path.with_suffix(".provenance.json")
        provenance = (
            ScanProvenance.model_validate(read_json(sidecar))
            if sidecar.exists()
            else ScanProvenance(config={}, seed=0)
        )
        return cls(
            axis1_name=axis1_name,
            axis2_name=axis2_name,
            axis1_values=[float(v) for v in frame[corner].to_list()],
            axis2_values=[float(label) for label in axis2_labels],
            grid=[
                [math.inf if cell is None or cell == "" else float(cell) for cell in row[1:]]
                for row in frame.iter_rows()
            ],
            provenance=provenance,
        )

    def finite_cells(self) -> list[tuple[int, int, float]]:
        return [
            (i, j, value)
            for i, row in enumerate(self.grid)
            for j, value in enumerate(row)
            if math.isfinite(value)
        ]
