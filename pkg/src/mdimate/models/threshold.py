"""Threshold result documents."""

import math

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mdimate.domain.value_objects import FormulaId, SumConvention, ThresholdMethod

DETECTABLE_SLACK = 1e-12


class ThresholdResult(BaseModel):
    """Critical Werner parameter v* above which the noisy witness fires.

    ``v_star = inf`` encodes "never detectable".
    """

    model_config = ConfigDict(frozen=True, ser_json_inf_nan="strings")

    v_star: float = Field(..., description="Critical Werner parameter, inf when never detectable")
    detectable: bool = Field(..., description="Whether some Werner state with v <= 1 is detected")
    formula_id: FormulaId = Field(..., description="Formula that produced the value")
    method: ThresholdMethod = Field(default=ThresholdMethod.CLOSED_FORM)

    @model_validator(mode="after")
    def _check_invariants(self) -> "ThresholdResult":
        if math.isnan(self.v_star) or self.v_star <= 0:
            raise ValueError(f"v_star must be positive, got {self.v_star!r}")
        if self.detectable != (self.v_star <= 1.0 + DETECTABLE_SLACK):
            raise ValueError(f"detectable={self.detectable} contradicts v_star={self.v_star!r}")
        return self

    @classmethod
    def of(cls, v_star: float, formula_id: FormulaId, method: ThresholdMethod = ThresholdMethod.CLOSED_FORM) -> "ThresholdResult":
        return cls(v_star=v_star, detectable=v_star <= 1.0 + DETECTABLE_SLACK, formula_id=formula_id, method=method)

    @classmethod
    def never(cls, formula_id: FormulaId, method: ThresholdMethod = ThresholdMethod.CLOSED_FORM) -> "ThresholdResult":
        return cls.of(math.inf, formula_id, method)

    @property
    def is_finite(self) -> bool:
        return math.isfinite(self.v_star)


class ThresholdComparison(BaseModel):
    """Closed form and numeric threshold side by side."""
    closed_form: ThresholdResult
    numeric: ThresholdResult
    difference: float = Field(..., description="|closed − numeric|; inf when exactly one side is infinite")
    agree: bool

    model_config = ConfigDict(ser_json_inf_nan="strings")


class MemoryConventionRow(BaseModel):
    """One pair-sum convention checked against the numeric threshold."""
    convention: SumConvention
    m: float
    closed_form: float
    numeric: float
    matches: bool

    model_config = ConfigDict(ser_json_inf_nan="strings")
