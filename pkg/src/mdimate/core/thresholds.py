"""
Werner-state detection thresholds under uniform input noise.

Every uniform noisy witness value on ρ_v is affine in v, f(v) = f(0) − c·v,
so the critical parameter is v* = f(0)/c. Closed forms give c analytically;
``numeric_threshold`` measures it through the full game.
"""

import math
from collections.abc import Sequence
from functools import lru_cache
from typing import Literal

import numpy as np
from loguru import logger
from scipy.optimize import bisect

from mdimate.core.game import bell_projector_setup, noisy_mdi_value
from mdimate.core.states import bloch_state, werner_state
from mdimate.core.tolerances import DETECTION_FLOOR, LINEARITY_TOL, PROBABILITY_SUM_TOL, THRESHOLD_AGREEMENT_TOL
from mdimate.core.witnesses import werner_decomposition
from mdimate.domain.entities import DensityMatrix, GameSetup, WitnessDecomposition
from mdimate.domain.value_objects import FormulaId, IndexSet, SumConvention, ThresholdMethod
from mdimate.exceptions import ArgumentError, InternalConsistencyError
from mdimate.models.noise import (
    Admixture,
    AmplitudeDamping,
    CorrelatedPauli,
    IdentityNoise,
    NoiseSpec,
    PauliFlip,
    WhiteNoise,
)
from mdimate.models.threshold import MemoryConventionRow, ThresholdComparison, ThresholdResult

ROOT_TOL = 1e-12
BISECTION_XTOL = 1e-12


def _check_probability(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ArgumentError(f"{name} must lie in [0, 1], got {value!r}")
    return float(value)


def _from_coefficient(coefficient: float, formula_id: FormulaId) -> ThresholdResult:
    """v* = 1/coefficient, never detectable when the coefficient is not positive."""
    if coefficient <= 0.0:
        return ThresholdResult.never(formula_id)
    return ThresholdResult.of(1.0 / coefficient, formula_id)


# ---------------------------------------------------------------- closed forms


def white_noise_threshold(p1: float, p2: float) -> ThresholdResult:
    """v* = 1/(3 p₁ p₂)."""
    p1, p2 = _check_probability("p1", p1), _check_probability("p2", p2)
    return _from_coefficient(3.0 * p1 * p2, FormulaId.WHITE_NOISE)


def admixture_closed_form_value(p1: float, p2: float, x: DensityMatrix, y: DensityMatrix) -> float:
    """A = 3p₁p₂ + (1−p₁)(1−p₂)[(1−2x₀)(1−2y₀) + 4(x₁y₁ + x₂y₂)].

    x₀ = X₀₀ and x₁ + i·x₂ = X₀₁, likewise for Y.
    """
    p1, p2 = _check_probability("p1", p1), _check_probability("p2", p2)
    if x.dim != 2 or y.dim != 2:
        raise ArgumentError("Admixed states must be qubit states")
    x0, y0 = x.op[0, 0].real, y.op[0, 0].real
    x1, x2 = x.op[0, 1].real, x.op[0, 1].imag
    y1, y2 = y.op[0, 1].real, y.op[0, 1].imag
    overlap = (1 - 2 * x0) * (1 - 2 * y0) + 4 * (x1 * y1 + x2 * y2)
    return float(3 * p1 * p2 + (1 - p1) * (1 - p2) * overlap)


def admixture_threshold(p1: float, p2: float, x: DensityMatrix, y: DensityMatrix) -> ThresholdResult:
    """v* = 1/A for A > 0; the A < 0 branch would need v < 0 and is never detectable."""
    return _from_coefficient(admixture_closed_form_value(p1, p2, x, y), FormulaId.ADMIXTURE)


def admixture_extremes(p1: float, p2: float) -> tuple[float, float]:
    """(A_min, A_max) = 3p₁p₂ ∓ (1−p₁)(1−p₂)."""
    p1, p2 = _check_probability("p1", p1), _check_probability("p2", p2)
    spread = (1 - p1) * (1 - p2)
    return 3 * p1 * p2 - spread, 3 * p1 * p2 + spread


def admixture_extreme_states(kind: Literal["min", "max"]) -> tuple[DensityMatrix, DensityMatrix]:
    """States X, Y attaining A_min (antiparallel) or A_max (parallel)."""
    if kind == "max":
        return bloch_state((0.0, 0.0, 1.0)), bloch_state((0.0, 0.0, 1.0))
    if kind == "min":
        return bloch_state((0.0, 0.0, 1.0)), bloch_state((0.0, 0.0, -1.0))
    raise ArgumentError(f"kind must be 'min' or 'max', got {kind!r}")


def admixture_grid_extremes(p1: float, p2: float, steps: int = 20) -> tuple[float, float]:
    """Brute-force min and max of A over pure X, Y on a polar × azimuthal grid.

    Uses the matrix-entry form of A so it checks ``admixture_extremes``
    independently of the Bloch-vector identity behind it.
    """
    p1, p2 = _check_probability("p1", p1), _check_probability("p2", p2)
    polar, azimuth = np.meshgrid(
        np.linspace(0.0, np.pi, steps), np.linspace(0.0, 2 * np.pi, steps, endpoint=False), indexing="ij"
    )
    polar, azimuth = polar.ravel(), azimuth.ravel()
    # Entries of (I + n·σ)/2: X₀₀ = (1 + n₃)/2, X₀₁ = (n₁ − i n₂)/2.
    e0 = (1 + np.cos(polar)) / 2
    e1 = np.sin(polar) * np.cos(azimuth) / 2
    e2 = -np.sin(polar) * np.sin(azimuth) / 2

    overlap = np.outer(1 - 2 * e0, 1 - 2 * e0) + 4 * (np.outer(e1, e1) + np.outer(e2, e2))
    values = 3 * p1 * p2 + (1 - p1) * (1 - p2) * overlap
    return float(values.min()), float(values.max())


def pauli_threshold(i: int, j: int, p1: float, p2: float) -> ThresholdResult:
    """Same axis: 1/(8p₁p₂ − 4p₁ − 4p₂ + 3). Different axes: 1/(4p₁p₂ − 1)."""
    if i not in (1, 2, 3) or j not in (1, 2, 3):
        raise ArgumentError(f"Pauli flip axes must be in 1..3, got ({i}, {j})")
    p1, p2 = _check_probability("p1", p1), _check_probability("p2", p2)
    if i == j:
        return _from_coefficient(8 * p1 * p2 - 4 * p1 - 4 * p2 + 3, FormulaId.PAULI_SAME)
    return _from_coefficient(4 * p1 * p2 - 1, FormulaId.PAULI_DIFFERENT)


def amplitude_damping_bracket(eps1: float, eps2: float) -> float:
    """1 − ε₁ − ε₂ + 2ε₁ε₂ + 2√((1−ε₁)(1−ε₂))."""
    eps1, eps2 = _check_probability("eps1", eps1), _check_probability("eps2", eps2)
    return 1 - eps1 - eps2 + 2 * eps1 * eps2 + 2 * math.sqrt((1 - eps1) * (1 - eps2))


def amplitude_damping_threshold(eps1: float, eps2: float) -> ThresholdResult:
    return _from_coefficient(amplitude_damping_bracket(eps1, eps2), FormulaId.AMPLITUDE_DAMPING)


def memory_threshold(
    m: float,
    probs: Sequence[float],
    convention: SumConvention = SumConvention.UNORDERED_PAIRS,
) -> ThresholdResult:
    """v* = 1/(3 + 8(m − 1)·Σ p_i p_j), the pair sum taken per ``convention``.

    Raises:
        ArgumentError: If m is outside [0, 1] or probs is not a distribution
    """
    m = _check_probability("m", m)
    for k, p in enumerate(probs):
        _check_probability(f"probs[{k}]", p)
    if abs(sum(probs) - 1.0) > PROBABILITY_SUM_TOL:
        raise ArgumentError(f"probs must sum to 1, got {sum(probs)!r}")
    return _from_coefficient(3 + 8 * (m - 1) * convention.pair_sum(probs), FormulaId.MEMORY)


def closed_form_threshold(
    noise: NoiseSpec, convention: SumConvention = SumConvention.UNORDERED_PAIRS
) -> ThresholdResult:
    """Dispatch a uniform noise spec to its closed form.

    Raises:
        ArgumentError: If the family has no closed form
    """
    match noise:
        case IdentityNoise():
            return white_noise_threshold(1.0, 1.0)
        case WhiteNoise(p1=p1, p2=p2):
            return white_noise_threshold(p1, p2)
        case Admixture(p1=p1, p2=p2):
            return admixture_threshold(p1, p2, noise.x_state, noise.y_state)
        case PauliFlip(i=i, j=j, p1=p1, p2=p2):
            return pauli_threshold(i, j, p1, p2)
        case AmplitudeDamping(eps1=eps1, eps2=eps2):
            return amplitude_damping_threshold(eps1, eps2)
        case CorrelatedPauli(m=m, probs=probs):
            return memory_threshold(m, probs, convention)
    raise ArgumentError(f"No closed-form threshold for {noise.noise_kind} noise")


# ---------------------------------------------------------------- numeric oracle


@lru_cache(maxsize=1)
def _werner_decomposition() -> WitnessDecomposition:
    return werner_decomposition()


def werner_setup(v: float) -> GameSetup:
    """Bell-projector game on werner_state(v) with the Werner decomposition."""
    return bell_projector_setup(_werner_decomposition(), werner_state(v))


def numeric_threshold(noise: NoiseSpec) -> ThresholdResult:
    """Root of v ↦ noisy_mdi_value(werner_setup(v), noise) on (0, 1].

    Solved as a two-point affine root, checked at the midpoint, with a
    bisection fallback when the affine root does not zero the value.

    Raises:
        ArgumentError: If the noise is not uniform
        InternalConsistencyError: If the value is not affine in v, or the
            maximally mixed state is already detected
    """
    if not noise.is_uniform():
        raise ArgumentError(f"{noise.noise_kind} noise is not uniform; thresholds need a fixed channel")

    def value(v: float) -> float:
        return noisy_mdi_value(werner_setup(v), noise)

    f0, f1, f_mid = value(0.0), value(1.0), value(0.5)
    curvature = abs(f_mid - (f0 + f1) / 2)
    if curvature > LINEARITY_TOL:
        raise InternalConsistencyError(f"{noise.noise_kind}: noisy value is not affine in v (midpoint gap {curvature:.3e})")
    if f1 >= -DETECTION_FLOOR:
        return ThresholdResult.never(FormulaId.NUMERIC, ThresholdMethod.NUMERIC)
    if f0 <= DETECTION_FLOOR:
        raise InternalConsistencyError(f"{noise.noise_kind}: the maximally mixed state gives {f0:.3e}, expected a positive value")

    v_star = f0 / (f0 - f1)
    if abs(value(v_star)) > ROOT_TOL:
        logger.warning(f"{noise.noise_kind}: affine root {v_star:.12g} missed, falling back to bisection")
        v_star = bisect(value, 0.0, 1.0, xtol=BISECTION_XTOL)
    logger.debug(f"{noise.noise_kind}: numeric threshold {v_star:.12g}")
    return ThresholdResult.of(float(v_star), FormulaId.NUMERIC, ThresholdMethod.NUMERIC)


# ---------------------------------------------------------------- comparisons


def thresholds_agree(a: float, b: float, tol: float = THRESHOLD_AGREEMENT_TOL) -> bool:
    """Agreement rule for two v* values.

    Both detectable: |a − b| < tol. Both undetectable: agree. Otherwise the
    detectable one must sit within tol of the boundary v = 1.
    """
    if a <= 1.0 and b <= 1.0:
        return abs(a - b) < tol
    if a > 1.0 and b > 1.0:
        return True
    finite = a if a <= 1.0 else b
    return abs(finite - 1.0) < tol


def _difference(a: float, b: float) -> float:
    if math.isinf(a) and math.isinf(b):
        return 0.0
    return abs(a - b)


def compare_thresholds(
    noise: NoiseSpec,
    convention: SumConvention = SumConvention.UNORDERED_PAIRS,
    tol: float = THRESHOLD_AGREEMENT_TOL,
) -> ThresholdComparison:
    closed = closed_form_threshold(noise, convention)
    numeric = numeric_threshold(noise)
    return ThresholdComparison(
        closed_form=closed,
        numeric=numeric,
        difference=_difference(closed.v_star, numeric.v_star),
        agree=thresholds_agree(closed.v_star, numeric.v_star, tol),
    )


def memory_convention_report(
    m: float,
    probs: Sequence[float],
    index_set: IndexSet = IndexSet.PAULI,
    tol: float = THRESHOLD_AGREEMENT_TOL,
) -> list[MemoryConventionRow]:
    """Each pair-sum convention against the numeric threshold of the same channel."""
    numeric = numeric_threshold(CorrelatedPauli(m=m, probs=list(probs), index_set=index_set)).v_star
    rows = []
    for convention in SumConvention:
        closed = memory_threshold(m, probs, convention).v_star
        rows.append(
            MemoryConventionRow(
                convention=convention,
                m=m,
                closed_form=closed,
                numeric=numeric,
                matches=thresholds_agree(closed, numeric, tol),
            )
        )
        logger.debug(f"m={m:g} {convention}: closed {closed:.12g} vs numeric {numeric:.12g}")
    return rows
