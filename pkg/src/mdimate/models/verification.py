"""Invariant suite reports."""

from pydantic import BaseModel, ConfigDict, Field


class InvariantReport(BaseModel):
    """Outcome of one invariant suite."""

    model_config = ConfigDict(ser_json_inf_nan="strings")

    name: str = Field(..., description="Invariant identifier shown in reports")
    passed: bool
    max_deviation: float = Field(..., description="Largest observed deviation (or violation) over the suite")
    tolerance: float
    samples: int = Field(default=1, description="Number of evaluated cases")
    detail: str = Field(default="")


class VerificationReport(BaseModel):
    """All invariant suites of one verify run."""
    seed: int
    invariants: list[InvariantReport] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(inv.passed for inv in self.invariants)

    def failing(self) -> list[str]:
        return [inv.name for inv in self.invariants if not inv.passed]

    def get(self, name: str) -> InvariantReport | None:
        return next((inv for inv in self.invariants if inv.name == name), None)
