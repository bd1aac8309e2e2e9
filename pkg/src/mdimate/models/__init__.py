"""
Pydantic documents that cross the process boundary.

- Noise specifications (NoiseSpec, discriminated on ``kind``)
- Witness decompositions (DecompositionDocument)
- Threshold results (ThresholdResult, ThresholdComparison, MemoryConventionRow)
- Scans (ScanAxis, ScanConfig, ScanResult)
- Verification reports (InvariantReport, VerificationReport)
"""

from mdimate.models.decomposition import DecompositionDocument
from mdimate.models.matrix import MatrixPayload, decode_matrix, encode_matrix
from mdimate.models.noise import (
    Admixture,
    AmplitudeDamping,
    CorrelatedPauli,
    EntanglingExample2,
    IdentityNoise,
    NoiseSpec,
    NonUniformExample1,
    PauliFlip,
    WhiteNoise,
    noise_spec_adapter,
    parse_noise_spec,
)
from mdimate.models.threshold import MemoryConventionRow, ThresholdComparison, ThresholdResult
from mdimate.models.verification import InvariantReport, VerificationReport

__all__ = [
    "Admixture",
    "AmplitudeDamping",
    "CorrelatedPauli",
    "DecompositionDocument",
    "EntanglingExample2",
    "IdentityNoise",
    "InvariantReport",
    "MatrixPayload",
    "MemoryConventionRow",
    "NoiseSpec",
    "NonUniformExample1",
    "PauliFlip",
    "ThresholdComparison",
    "ThresholdResult",
    "VerificationReport",
    "WhiteNoise",
    "decode_matrix",
    "encode_matrix",
    "noise_spec_adapter",
    "parse_noise_spec",
]
