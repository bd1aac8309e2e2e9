"""Witness decomposition documents."""

from pathlib import Path

from loguru import logger
from pydantic import BaseModel, Field

from mdimate.core.tensor import DimFactorization
from mdimate.domain.entities import DensityMatrix, WitnessDecomposition
from mdimate.models.matrix import MatrixPayload, decode_matrix, encode_matrix
from mdimate.utils.file_utils import read_json, write_text


class DecompositionDocument(BaseModel):
    """JSON form of a WitnessDecomposition."""
    name: str = Field(default="decomposition", description="Label shown in reports")
    beta: list[list[float]] = Field(..., description="Coefficients β[s][t]")
    tau: list[MatrixPayload] = Field(..., description="Alice's input states τ_s")
    omega: list[MatrixPayload] = Field(..., description="Bob's input states ω_t")

    @classmethod
    def from_decomposition(cls, decomp: WitnessDecomposition, name: str = "decomposition") -> "DecompositionDocument":
        return cls(
            name=name,
            beta=[[float(b) for b in row] for row in decomp.beta],
            tau=[encode_matrix(state.op) for state in decomp.tau],
            omega=[encode_matrix(state.op) for state in decomp.omega],
        )

    def to_decomposition(self) -> WitnessDecomposition:
        """Rebuild the entity; every state is re-validated."""
        def states(payloads: list[MatrixPayload]) -> tuple[DensityMatrix, ...]:
            decoded = [decode_matrix(p) for p in payloads]
            return tuple(DensityMatrix(m, DimFactorization((m.shape[0],))) for m in decoded)

        return WitnessDecomposition(self.beta, states(self.tau), states(self.omega))

    def save_json(self, file_path: str | Path) -> Path:
        """Save the decomposition to a JSON file.

        Args:
            file_path: Destination path
        """
        path = write_text(file_path, self.model_dump_json(indent=2))
        logger.info(f"Saved decomposition '{self.name}' to {path}")
        return path

    @classmethod
    def load_json(cls, file_path: str | Path) -> "DecompositionDocument":
        """Load a decomposition from a JSON file.

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: If the content is not a valid decomposition document
        """
        doc = cls.model_validate(read_json(file_path))
        logger.info(f"Loaded decomposition '{doc.name}' from {file_path} ({len(doc.tau)}x{len(doc.omega)})")
        return doc
