"""
Fake entanglement detection by corrupted quantum inputs.

Two noise maps make the Werner witness fire on a product shared state: a
non-uniform local admixture toward |θ⟩, and an entangling map that replaces
each product input by |χ_st⟩.
"""

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np
from loguru import logger

from mdimate.core.channels import entangled_pair_vector
from mdimate.core.game import noisy_mdi_value
from mdimate.core.states import IDENTITY_2, SIGMA_Y, bloch_state, dominant_vector, maximally_mixed, product_state
from mdimate.core.tensor import DimFactorization, kron
from mdimate.core.tolerances import ORACLE_TOL
from mdimate.core.witnesses import werner_decomposition
from mdimate.domain.entities import BlochVector, GameSetup, PovmElement
from mdimate.domain.value_objects import PerpConvention
from mdimate.exceptions import ArgumentError, InternalConsistencyError
from mdimate.models.noise import EntanglingExample2, NonUniformExample1

ALICE_Y_PLUS = (IDENTITY_2 + SIGMA_Y) / 2
BOB_Y_MINUS = (IDENTITY_2 - SIGMA_Y) / 2


@dataclass(frozen=True)
class GridMinimum:
    """Lowest value found on the θ grid."""
    value: float
    theta: BlochVector
    polar: float
    azimuth: float
    points: int


def _product_game(alice_effective: np.ndarray, bob_effective: np.ndarray) -> GameSetup:
    """Werner game on I/2 ⊗ I/2 whose effective elements are the given qubit operators."""
    share = maximally_mixed(2)
    alice = PovmElement(kron(alice_effective, IDENTITY_2), DimFactorization((2, 2)))
    bob = PovmElement(kron(IDENTITY_2, bob_effective), DimFactorization((2, 2)))
    return GameSetup(werner_decomposition(), product_state(share, share), alice, bob)


def _as_theta(theta: BlochVector | Sequence[float]) -> BlochVector:
    return theta if isinstance(theta, BlochVector) else BlochVector.from_array(theta)


def _check_weight(name: str, value: float) -> float:
    if not 0.0 <= value <= 1.0:
        raise ArgumentError(f"{name} must lie in [0, 1], got {value!r}")
    return float(value)


# ---------------------------------------------------------------- non-uniform admixture


def example1_closed_form(q: float, theta: BlochVector | Sequence[float]) -> float:
    """−(q²/8)·⟨θ⊥|ω₃|θ⊥⟩·Σ_{s≤2}⟨θ⊥|τ_s|θ⊥⟩."""
    q = _check_weight("q", q)
    theta = _as_theta(theta)
    perp = bloch_state(-theta).op
    decomp = werner_decomposition()
    bob_overlap = decomp.omega[3].expectation(perp)
    alice_overlap = sum(decomp.tau[s].expectation(perp) for s in range(3))
    return -(q * q / 8) * bob_overlap * alice_overlap


def example1_value(q: float, theta: BlochVector | Sequence[float]) -> float:
    """Noisy witness value under the non-uniform admixture with A′ = B′ = |θ⊥⟩⟨θ⊥|.

    Evaluated through the full game and checked against the closed form.

    Raises:
        ArgumentError: If q is outside [0, 1]
        InternalConsistencyError: If the two evaluations differ beyond 1e-10
    """
    q = _check_weight("q", q)
    theta = _as_theta(theta)
    noise = NonUniformExample1(q=q, theta=theta.as_tuple())
    perp = bloch_state(-theta).op
    full = noisy_mdi_value(_product_game(perp, perp), noise)
    closed = example1_closed_form(q, theta)
    if abs(full - closed) > ORACLE_TOL:
        raise InternalConsistencyError(
            f"Non-uniform admixture value {full:.15g} disagrees with the closed form {closed:.15g} at θ={theta}"
        )
    return full


def example1_grid(polar_steps: int = 50, azimuth_steps: int = 100) -> list[tuple[float, float]]:
    """(polar, azimuth) pairs: polar over [0, π] inclusive, azimuth over [0, 2π)."""
    polar = np.linspace(0.0, np.pi, polar_steps)
    azimuth = np.linspace(0.0, 2 * np.pi, azimuth_steps, endpoint=False)
    return [(float(a), float(b)) for a in polar for b in azimuth]


def example1_grid_minimum(
    q: float, polar_steps: int = 50, azimuth_steps: int = 100, verify_all: bool = False
) -> GridMinimum:
    """Minimum over a Bloch-sphere grid of θ.

    The search runs on the closed form; the minimizer is always re-evaluated
    through the full game, and every grid point is when ``verify_all`` is set.
    """
    evaluate = example1_value if verify_all else example1_closed_form
    best: GridMinimum | None = None
    grid = example1_grid(polar_steps, azimuth_steps)
    for polar, azimuth in grid:
        theta = BlochVector.from_angles(polar, azimuth)
        value = evaluate(q, theta)
        if best is None or value < best.value:
            best = GridMinimum(value, theta, polar, azimuth, len(grid))
    assert best is not None
    confirmed = example1_value(q, best.theta)
    logger.info(f"q={q:g}: grid minimum {confirmed:.12g} at θ={best.theta}")
    return GridMinimum(confirmed, best.theta, best.polar, best.azimuth, best.points)


# ---------------------------------------------------------------- entangling map


def example2_value(p: float, convention: PerpConvention = PerpConvention.PLUS) -> float:
    """Σ β[s, t]·Tr[(A′ ⊗ B′)|χ_st⟩⟨χ_st|] with A′ = (I + σ_y)/2, B′ = (I − σ_y)/2."""
    p = _check_weight("p", p)
    decomp = werner_decomposition()
    alice_vectors = [dominant_vector(state) for state in decomp.tau]
    bob_vectors = [dominant_vector(state) for state in decomp.omega]
    measurement = kron(ALICE_Y_PLUS, BOB_Y_MINUS)

    total = 0.0
    for s, t in decomp.index_pairs():
        chi = entangled_pair_vector(alice_vectors[s], bob_vectors[t], p, convention)
        total += decomp.beta[s, t] * float(np.vdot(chi, measurement @ chi).real)
    return total


def example2_game_value(p: float, convention: PerpConvention = PerpConvention.PLUS) -> float:
    """``example2_value`` evaluated through the full game on a product shared state."""
    p = _check_weight("p", p)
    noise = EntanglingExample2(p=p, perp_convention=convention)
    return noisy_mdi_value(_product_game(ALICE_Y_PLUS, BOB_Y_MINUS), noise)


def example2_sweep(
    ps: Iterable[float], convention: PerpConvention = PerpConvention.PLUS
) -> list[tuple[float, float]]:
    return [(float(p), example2_value(p, convention)) for p in ps]


def example2_conventions(p: float = 0.0) -> dict[PerpConvention, float]:
    """The value under every phase convention of |ψ⊥⟩."""
    return {convention: example2_value(p, convention) for convention in PerpConvention}
