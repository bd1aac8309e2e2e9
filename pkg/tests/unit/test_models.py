"""Tests for the pydantic documents: noise specs, thresholds, decompositions and scans."""

import json
import math

import numpy as np
import pytest
from pydantic import ValidationError

from mdimate.core.states import bloch_state
from mdimate.core.witnesses import verify_decomposition, werner_witness
from mdimate.domain.value_objects import FormulaId, ScanKind, SumConvention
from mdimate.exceptions import ScanConfigError
from mdimate.models import (
    Admixture,
    CorrelatedPauli,
    DecompositionDocument,
    EntanglingExample2,
    NonUniformExample1,
    PauliFlip,
    ThresholdResult,
    VerificationReport,
    InvariantReport,
    WhiteNoise,
    decode_matrix,
    encode_matrix,
    parse_noise_spec,
)
from mdimate.models.scan import ScanAxis, ScanConfig, ScanProvenance, ScanResult, noise_for


@pytest.mark.parametrize(
    "spec",
    [
        WhiteNoise(p1=0.2, p2=0.9),
        Admixture.from_states(0.3, 0.4, bloch_state((0.0, 0.0, 1.0)), bloch_state((0.6, 0.0, 0.0))),
        PauliFlip(i=1, j=3, p1=0.5, p2=0.25),
        CorrelatedPauli(m=0.3, probs=[0.2, 0.3, 0.5]),
        NonUniformExample1(q=0.9, theta=(0.0, 1.0, 0.0)),
        EntanglingExample2(p=0.1, perp_convention="minus_i"),
    ],
)
def test_noise_spec_json_carries_its_kind(spec):
    document = json.loads(spec.model_dump_json())
    assert document["kind"] == spec.noise_kind
    assert parse_noise_spec(spec.model_dump_json()) == spec


def test_noise_spec_rejects_unknown_kind():
    with pytest.raises(ValidationError):
        parse_noise_spec({"kind": "dephasing", "p": 0.5})


def test_noise_spec_validation():
    with pytest.raises(ValidationError):
        WhiteNoise(p1=1.5, p2=0.5)
    with pytest.raises(ValidationError):
        CorrelatedPauli(m=0.5, probs=[0.5, 0.5])
    with pytest.raises(ValidationError):
        NonUniformExample1(q=0.5, theta=(0.5, 0.0, 0.0))
    with pytest.raises(ValidationError):
        Admixture(p1=0.5, p2=0.5, x=encode_matrix(np.eye(2)), y=encode_matrix(np.eye(2) / 2))


def test_uniformity_flags():
    assert WhiteNoise(p1=0.5, p2=0.5).is_uniform()
    assert not EntanglingExample2(p=0.5).is_uniform()
    assert not NonUniformExample1(q=0.5, theta=(1.0, 0.0, 0.0)).is_uniform()


def test_matrix_payload_preserves_complex_entries():
    m = np.array([[0.5, 0.25 - 0.1j], [0.25 + 0.1j, 0.5]])
    np.testing.assert_array_equal(decode_matrix(encode_matrix(m)), m)


def test_threshold_result_invariants():
    with pytest.raises(ValidationError):
        ThresholdResult(v_star=0.5, detectable=False, formula_id=FormulaId.WHITE_NOISE)
    with pytest.raises(ValidationError):
        ThresholdResult(v_star=-1.0, detectable=True, formula_id=FormulaId.WHITE_NOISE)
    never = ThresholdResult.never(FormulaId.PAULI_DIFFERENT)
    assert not never.detectable
    assert json.loads(never.model_dump_json())["v_star"] == "Infinity"


def test_decomposition_document_round_trip(tmp_path, werner):
    path = DecompositionDocument.from_decomposition(werner, name="werner").save_json(tmp_path / "werner.json")
    restored = DecompositionDocument.load_json(path).to_decomposition()
    np.testing.assert_allclose(restored.beta, werner.beta)
    assert verify_decomposition(restored, werner_witness()) < 1e-10


def test_verification_report_lists_failures():
    report = VerificationReport(
        seed=1,
        invariants=[
            InvariantReport(name="a", passed=True, max_deviation=0.0, tolerance=1e-10),
            InvariantReport(name="b", passed=False, max_deviation=1e-3, tolerance=1e-10),
        ],
    )
    assert not report.passed
    assert report.failing() == ["b"]
    assert report.get("a").passed


# ---------------------------------------------------------------- scans


def white_config(**overrides) -> ScanConfig:
    document = {
        "noise_kind": "white_noise",
        "axis1": {"name": "p1", "min": 0.0, "max": 1.0, "steps": 5},
        "axis2": {"name": "p2", "min": 0.0, "max": 1.0, "steps": 3},
    }
    document.update(overrides)
    return ScanConfig.from_document(document)


def test_axis_values():
    assert ScanAxis(name="p1", min=0.0, max=1.0, steps=5).values() == [0.0, 0.25, 0.5, 0.75, 1.0]
    with pytest.raises(ValidationError):
        ScanAxis(name="p1", min=1.0, max=0.0, steps=5)
    with pytest.raises(ValidationError):
        ScanAxis(name="p1", min=0.0, max=1.0, steps=1)


def test_config_names_the_bad_field():
    with pytest.raises(ScanConfigError) as excinfo:
        white_config(axis1={"name": "eps1", "min": 0.0, "max": 1.0, "steps": 5})
    assert excinfo.value.field == "axis1"
    with pytest.raises(ScanConfigError) as excinfo:
        white_config(axis2={"name": "p2", "min": 0.0, "max": 1.0, "steps": 1})
    assert excinfo.value.field.startswith("axis2")
    with pytest.raises(ScanConfigError) as excinfo:
        white_config(fixed={"axis": 3})
    assert excinfo.value.field == "fixed"


def test_config_builds_noise_per_cell():
    config = white_config()
    assert config.noise_at(0.25, 0.5) == WhiteNoise(p1=0.25, p2=0.5)
    assert config.convention() == SumConvention.UNORDERED_PAIRS


def test_noise_for_each_kind():
    assert noise_for(ScanKind.PAULI_SAME, {"p1": 0.1, "p2": 0.2, "axis": 2}) == PauliFlip(i=2, j=2, p1=0.1, p2=0.2)
    memory = noise_for(ScanKind.CORRELATED_PAULI, {"m": 0.5, "p1": 0.4})
    assert memory.probs == pytest.approx([0.4, 0.3, 0.3])
    low = noise_for(ScanKind.ADMIXTURE_MIN, {"p1": 0.5, "p2": 0.5})
    assert isinstance(low, Admixture)
    with pytest.raises(ScanConfigError) as excinfo:
        noise_for(ScanKind.AMPLITUDE_DAMPING, {"eps1": 0.5})
    assert excinfo.value.field == "eps2"
    with pytest.raises(ScanConfigError):
        noise_for(ScanKind.PAULI_DIFFERENT, {"p1": 0.5, "p2": 0.5, "i": 1, "j": 1})


def sample_result() -> ScanResult:
    return ScanResult(
        axis1_name="p1",
        axis2_name="p2",
        axis1_values=[0.0, 0.5, 1.0],
        axis2_values=[0.0, 1.0],
        grid=[[math.inf, math.inf], [math.inf, 2 / 3], [math.inf, 1 / 3]],
        provenance=ScanProvenance(config={"noise_kind": "white_noise"}, seed=7),
    )


def test_csv_layout():
    lines = sample_result().to_csv_text().split("\n")
    assert lines[0] == "p1\\p2,0,1"
    assert lines[1] == "0,,"
    assert lines[2] == "0.5,,0.666666666667"
    assert "\r" not in sample_result().to_csv_text()


def test_csv_round_trip(tmp_path):
    original = sample_result()
    path = original.to_csv(tmp_path / "white.csv")
    assert original.sidecar_path(path).exists()
    restored = ScanResult.from_csv(path)
    assert restored.axis1_values == original.axis1_values
    assert restored.axis2_values == original.axis2_values
    expected = [[float(f"{v:.12g}") if math.isfinite(v) else v for v in row] for row in original.grid]
    assert restored.grid == expected
    assert restored.provenance.seed == 7


def test_result_shape_is_checked():
    with pytest.raises(ValidationError):
        ScanResult(
            axis1_name="p1",
            axis2_name="p2",
            axis1_values=[0.0, 1.0],
            axis2_values=[0.0],
            grid=[[1.0]],
            provenance=ScanProvenance(config={}, seed=0),
        )


def test_finite_cells():
    assert sample_result().finite_cells() == [(1, 1, pytest.approx(2 / 3)), (2, 1, pytest.approx(1 / 3))]
