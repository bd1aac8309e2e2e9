"""
Noise specifications.

A tagged union over the noise families acting on the quantum inputs,
discriminated by ``kind`` for JSON round-trips.
"""

import math
from typing import Annotated, Literal, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator, model_validator

from mdimate.core.tensor import DimFactorization
from mdimate.core.tolerances import PROBABILITY_SUM_TOL
from mdimate.domain.entities import BlochVector, DensityMatrix
from mdimate.domain.value_objects import IndexSet, NoiseKind, PerpConvention
from mdimate.exceptions import MdiMateError
from mdimate.models.matrix import MatrixPayload, decode_matrix, encode_matrix

Probability = Annotated[float, Field(ge=0.0, le=1.0)]


class NoiseModel(BaseModel):
    """Common behaviour of every noise specification."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    @property
    def noise_kind(self) -> NoiseKind:
        return NoiseKind(self.kind)  # type: ignore[attr-defined]

    def is_uniform(self) -> bool:
        return self.noise_kind.is_uniform()


class IdentityNoise(NoiseModel):
    kind: Literal["identity"] = "identity"


class WhiteNoise(NoiseModel):
    """ρ ↦ pρ + (1 − p)I/2 on each side."""
    kind: Literal["white_noise"] = "white_noise"
    p1: Probability = Field(..., description="Weight kept on Alice's input")
    p2: Probability = Field(..., description="Weight kept on Bob's input")


class Admixture(NoiseModel):
    """ρ ↦ pρ + (1 − p)X on Alice's side, pρ + (1 − p)Y on Bob's."""
    kind: Literal["admixture"] = "admixture"
    p1: Probability
    p2: Probability
    x: MatrixPayload = Field(..., description="Qubit state mixed into Alice's input")
    y: MatrixPayload = Field(..., description="Qubit state mixed into Bob's input")

    @field_validator("x", "y")
    @classmethod
    def _must_be_qubit_state(cls, value: MatrixPayload) -> MatrixPayload:
        try:
            DensityMatrix(decode_matrix(value), DimFactorization((2,)))
        except MdiMateError as e:
            raise ValueError(f"not a qubit density matrix: {e}") from e
        return value

    @classmethod
    def from_states(cls, p1: float, p2: float, x: DensityMatrix, y: DensityMatrix) -> "Admixture":
        return cls(p1=p1, p2=p2, x=encode_matrix(x.op), y=encode_matrix(y.op))

    @property
    def x_state(self) -> DensityMatrix:
        return DensityMatrix(decode_matrix(self.x), DimFactorization((2,)))

    @property
    def y_state(self) -> DensityMatrix:
        return DensityMatrix(decode_matrix(self.y), DimFactorization((2,)))


class PauliFlip(NoiseModel):
    """ρ ↦ pρ + (1 − p)σ_k ρ σ_k with k = i on Alice's side and k = j on Bob's."""
    kind: Literal["pauli_flip"] = "pauli_flip"
    i: int = Field(..., ge=1, le=3)
    j: int = Field(..., ge=1, le=3)
    p1: Probability
    p2: Probability


class AmplitudeDamping(NoiseModel):
    kind: Literal["amplitude_damping"] = "amplitude_damping"
    eps1: Probability = Field(..., description="Damping strength on Alice's input")
    eps2: Probability = Field(..., description="Damping strength on Bob's input")


class CorrelatedPauli(NoiseModel):
    """Pauli memory channel with Kraus weights (1 − m)p_i p_j + m p_j δ_ij on σ_i ⊗ σ_j."""
    kind: Literal["correlated_pauli"] = "correlated_pauli"
    m: Probability = Field(..., description="Memory (correlation) strength")
    probs: list[Probability] = Field(..., description="Pauli probabilities, one per index in index_set")
    index_set: IndexSet = Field(default=IndexSet.PAULI)

    @model_validator(mode="after")
    def _check_distribution(self) -> "CorrelatedPauli":
        expected = len(self.index_set.indices())
        if len(self.probs) != expected:
            raise ValueError(f"index set {self.index_set} needs {expected} probabilities, got {len(self.probs)}")
        if abs(sum(self.probs) - 1.0) > PROBABILITY_SUM_TOL:
            raise ValueError(f"probabilities must sum to 1, got {sum(self.probs)!r}")
        return self

    def joint_weights(self) -> dict[tuple[int, int], float]:
        """Weight of σ_i ⊗ σ_j keyed by Pauli indices."""
        indices = self.index_set.indices()
        return {
            (i, j): (1 - self.m) * pi * pj + (self.m * pj if a == b else 0.0)
            for a, (i, pi) in enumerate(zip(indices, self.probs))
            for b, (j, pj) in enumerate(zip(indices, self.probs))
        }


class NonUniformExample1(NoiseModel):
    """τ_s ↦ p^A_s τ_s + (1 − p^A_s)|θ⟩⟨θ| and ω_t ↦ p^B_t ω_t + (1 − p^B_t)|θ⟩⟨θ|."""
    kind: Literal["non_uniform_example1"] = "non_uniform_example1"
    q: Probability
    theta: tuple[float, float, float] = Field(..., description="Unit Bloch vector of |θ⟩")
    table_a: list[Probability] | None = Field(default=None, description="p^A_s; defaults to (q, q, q, 0)")
    table_b: list[Probability] | None = Field(default=None, description="p^B_t; defaults to (0, 0, 0, q)")

    @field_validator("theta")
    @classmethod
    def _must_be_pure(cls, value: tuple[float, float, float]) -> tuple[float, float, float]:
        norm = math.sqrt(sum(c * c for c in value))
        if abs(norm - 1.0) > 1e-10:
            raise ValueError(f"theta must be a unit Bloch vector, norm is {norm!r}")
        return value

    @property
    def theta_vector(self) -> BlochVector:
        return BlochVector(*self.theta)

    @property
    def alice_table(self) -> list[float]:
        return list(self.table_a) if self.table_a is not None else [self.q, self.q, self.q, 0.0]

    @property
    def bob_table(self) -> list[float]:
        return list(self.table_b) if self.table_b is not None else [0.0, 0.0, 0.0, self.q]


class EntanglingExample2(NoiseModel):
    """τ_s ⊗ ω_t ↦ |χ_st⟩⟨χ_st|, entangling pure product inputs."""
    kind: Literal["entangling_example2"] = "entangling_example2"
    p: Probability
    perp_convention: PerpConvention = Field(default=PerpConvention.PLUS)


NoiseSpec = Annotated[
    Union[
        IdentityNoise,
        WhiteNoise,
        Admixture,
        PauliFlip,
        AmplitudeDamping,
        CorrelatedPauli,
        NonUniformExample1,
        EntanglingExample2,
    ],
    Field(discriminator="kind"),
]

noise_spec_adapter: TypeAdapter[NoiseSpec] = TypeAdapter(NoiseSpec)


def parse_noise_spec(data: dict | str) -> NoiseSpec:
    """Validate a noise specification from a dict or a JSON string."""
    if isinstance(data, str):
        return noise_spec_adapter.validate_json(data)
    return noise_spec_adapter.validate_python(data)
