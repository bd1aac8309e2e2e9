"""End-to-end checks of the headline values, threshold agreement and scan regions.

The default run uses reduced grids and trial counts; the ``slow`` variants
run the full resolutions.
"""

import math

import numpy as np
import pytest
from scipy.optimize import bisect

from mdimate.core.channels import adjoint_identity_deviation, adjoint_preserves_separability, catalog_channels, catalog_specs
from mdimate.core.fake_detection import example1_closed_form, example1_grid_minimum, example1_value, example2_value
from mdimate.core.game import bell_projector_setup, mdi_value, mdi_value_fast, noisy_mdi_value
from mdimate.core.sampling import make_rng, random_state
from mdimate.core.states import werner_state
from mdimate.core.tensor import DimFactorization
from mdimate.core.thresholds import (
    admixture_extreme_states,
    amplitude_damping_bracket,
    compare_thresholds,
    numeric_threshold,
    werner_setup,
)
from mdimate.domain.entities import BlochVector, DensityMatrix
from mdimate.domain.value_objects import PerpConvention, ScanKind, SumConvention
from mdimate.models import Admixture, AmplitudeDamping, CorrelatedPauli, PauliFlip, WhiteNoise
from mdimate.models.scan import ScanConfig
from mdimate.services import ScanService, ThresholdService, VerificationService
from mdimate.utils.settings import ScanSettings

SEED = 20240101


# ---------------------------------------------------------------- witness game


def test_werner_value(werner):
    for v in np.linspace(0.0, 1.0, 11):
        value = mdi_value(bell_projector_setup(werner, werner_state(float(v))))
        assert value == pytest.approx((1 - 3 * v) / 16, abs=1e-10)


def test_full_game_matches_the_witness_expectation(werner):
    for trial in range(100):
        rho = DensityMatrix(random_state(4, make_rng(SEED + trial)).op, DimFactorization((2, 2)))
        assert abs(mdi_value(bell_projector_setup(werner, rho)) - mdi_value_fast(werner, rho)) < 1e-10


def test_separable_states_never_score_negative(werner):
    report = VerificationService(mdi_trials=200).check_mdi_property(werner, SEED)
    assert report.passed
    assert report.samples == 200


# ---------------------------------------------------------------- fake detection


def test_entangling_map_fakes_a_detection():
    assert example2_value(0.0) == pytest.approx(-1 / 12, abs=1e-10)
    assert example2_value(1.0) >= -1e-9


def test_entangling_map_depends_on_the_phase_convention():
    assert example2_value(0.0, PerpConvention.MINUS) == pytest.approx(-1 / 12, abs=1e-10)
    assert example2_value(0.0, PerpConvention.PLUS_I) == pytest.approx(1 / 12, abs=1e-10)


def _check_example1_grid(polar_steps: int, azimuth_steps: int) -> None:
    best = example1_grid_minimum(1.0, polar_steps, azimuth_steps, verify_all=True)
    assert best.value < -1e-4
    for polar in np.linspace(0.0, math.pi, 5):
        for azimuth in np.linspace(0.0, 2 * math.pi, 7):
            theta = BlochVector.from_angles(float(polar), float(azimuth))
            assert abs(example1_closed_form(1.0, theta) - example1_value(1.0, theta)) < 1e-10


def test_non_uniform_admixture_fakes_a_detection():
    _check_example1_grid(12, 24)


@pytest.mark.slow
def test_non_uniform_admixture_full_grid():
    _check_example1_grid(50, 100)


# ---------------------------------------------------------------- thresholds


def _families(p1: float, p2: float) -> list:
    low, high = admixture_extreme_states("min"), admixture_extreme_states("max")
    return [
        WhiteNoise(p1=p1, p2=p2),
        PauliFlip(i=3, j=3, p1=p1, p2=p2),
        PauliFlip(i=1, j=2, p1=p1, p2=p2),
        AmplitudeDamping(eps1=p1, eps2=p2),
        Admixture.from_states(p1, p2, *low),
        Admixture.from_states(p1, p2, *high),
    ]


def _check_threshold_grid(steps: int) -> None:
    for p1 in np.linspace(0.0, 1.0, steps):
        for p2 in np.linspace(0.0, 1.0, steps):
            for noise in _families(float(p1), float(p2)):
                comparison = compare_thresholds(noise)
                assert comparison.agree, f"{noise}: {comparison}"


def test_closed_forms_match_numeric_thresholds():
    _check_threshold_grid(3)


@pytest.mark.slow
def test_closed_forms_match_numeric_thresholds_full_grid():
    _check_threshold_grid(9)


def _check_separability_preserving_noise(werner, trials: int, games: int) -> None:
    service = VerificationService(separability_trials=trials, noisy_trials=games)
    report = service.check_separability_preservation(werner, SEED)
    assert report.passed, report.detail
    assert report.samples > 0


def test_separability_preserving_noise_keeps_the_witness_sound(werner):
    _check_separability_preserving_noise(werner, trials=100, games=20)


@pytest.mark.slow
def test_separability_preserving_noise_full(werner):
    _check_separability_preserving_noise(werner, trials=1000, games=200)


PROBABILITY_VECTORS = [
    [1 / 3, 1 / 3, 1 / 3],
    [0.2, 0.3, 0.5],
    [0.7, 0.2, 0.1],
    [1.0, 0.0, 0.0],
    [0.05, 0.9, 0.05],
]


@pytest.mark.parametrize("probs", PROBABILITY_VECTORS)
def test_full_memory_reduces_to_the_noiseless_threshold(probs):
    assert numeric_threshold(CorrelatedPauli(m=1.0, probs=probs)).v_star == pytest.approx(1 / 3, abs=1e-6)


def test_memory_pair_sum_convention():
    rows = ThresholdService().memory_conventions([0.0, 0.5], PROBABILITY_VECTORS[1]).unwrap()
    matching = {row.convention for row in rows if row.matches}
    assert SumConvention.UNORDERED_PAIRS in matching


# ---------------------------------------------------------------- figure grids


def scan(kind: ScanKind, names: tuple[str, str], steps: int = 11, **fixed):
    config = ScanConfig.from_document(
        {
            "noise_kind": kind,
            "axis1": {"name": names[0], "min": 0.0, "max": 1.0, "steps": steps},
            "axis2": {"name": names[1], "min": 0.0, "max": 1.0, "steps": steps},
            "fixed": fixed,
        }
    )
    return ScanService(ScanSettings()).evaluate(config)


def test_same_axis_flips_split_at_one_half():
    result = scan(ScanKind.PAULI_SAME, ("p1", "p2"), axis=3)
    for i, p1 in enumerate(result.axis1_values):
        for j, p2 in enumerate(result.axis2_values):
            if (p1 - 0.5) * (p2 - 0.5) < 0:
                assert math.isinf(result.grid[i][j])
            elif (p1 - 0.5) * (p2 - 0.5) > 0:
                assert math.isfinite(result.grid[i][j])


def test_parallel_admixture_is_detected_on_a_larger_region():
    low = {(i, j) for i, j, _ in scan(ScanKind.ADMIXTURE_MIN, ("p1", "p2")).finite_cells()}
    high = {(i, j) for i, j, _ in scan(ScanKind.ADMIXTURE_MAX, ("p1", "p2")).finite_cells()}
    assert low < high


@pytest.mark.parametrize("eps1", [0.0, 0.2, 0.4])
def test_amplitude_damping_boundary(eps1):
    eps2 = bisect(lambda e: amplitude_damping_bracket(eps1, e) - 1.0, 0.0, 1.0, xtol=1e-14)
    assert amplitude_damping_bracket(eps1, eps2) == pytest.approx(1.0, abs=1e-6)
    noise = AmplitudeDamping(eps1=eps1, eps2=eps2)
    assert compare_thresholds(noise).closed_form.v_star == pytest.approx(1.0, abs=1e-6)
    assert abs(noisy_mdi_value(werner_setup(1.0), noise)) < 1e-6
    if eps1 == 0.0:
        assert eps2 == pytest.approx(2 * math.sqrt(2) - 2, abs=1e-10)


def test_amplitude_damping_scan_follows_the_boundary():
    result = scan(ScanKind.AMPLITUDE_DAMPING, ("eps1", "eps2"))
    for i in (0, 2, 4):
        eps1 = result.axis1_values[i]
        boundary = bisect(lambda e: amplitude_damping_bracket(eps1, e) - 1.0, 0.0, 1.0, xtol=1e-14)
        row = result.grid[i]
        finite = [eps2 for eps2, cell in zip(result.axis2_values, row) if math.isfinite(cell)]
        assert max(finite) < boundary < min(e for e in result.axis2_values if e > max(finite))
        for eps2, cell in zip(result.axis2_values, row):
            if eps2 < boundary:
                assert cell == pytest.approx(1.0 / amplitude_damping_bracket(eps1, eps2), abs=1e-12)
            else:
                assert math.isinf(cell)
    assert result.axis1_values[0] == 0.0
    assert math.isfinite(result.grid[0][8]) and math.isinf(result.grid[0][9])


# ---------------------------------------------------------------- channels


def test_catalog_channels_are_cptp():
    for name, channel in catalog_channels().items():
        certificate = channel.certify()
        assert certificate.passed, name
        assert certificate.completeness_deviation <= 1e-10
        assert certificate.choi_min_eigenvalue >= -1e-9


def test_adjoint_identity_on_the_catalog():
    for name, channel in catalog_channels().items():
        assert adjoint_identity_deviation(channel, 100, SEED) <= 1e-10, name


def test_local_catalog_noise_preserves_separability():
    for name in ("identity", "white_noise", "pauli_same", "amplitude_damping"):
        assert adjoint_preserves_separability(catalog_specs()[name], trials=100, seed=SEED).passed, name
