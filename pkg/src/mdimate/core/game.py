"""
Semi-quantum game engine.

Tensor ordering for every joint computation is τ_s ⊗ ρ_AB ⊗ ω_t, with Alice's
element on factors (0, 1) and Bob's on factors (2, 3).
"""

import numpy as np
from loguru import logger

from mdimate.core.channels import apply, apply_channel, channel_for
from mdimate.core.states import max_entangled
from mdimate.core.tensor import ComplexMatrix, DimFactorization, kron, kron_all, partial_trace, permute_subsystems, trace_product
from mdimate.core.tolerances import IMAGINARY_RESIDUE_TOL, PROBABILITY_TOL
from mdimate.core.witnesses import expectation, witness_from_decomposition
from mdimate.domain.entities import DensityMatrix, GameSetup, PovmElement, WitnessDecomposition, WitnessOperator
from mdimate.domain.value_objects import Side
from mdimate.exceptions import ArgumentError, DimensionError, NumericContractError
from mdimate.models.noise import IdentityNoise, NoiseSpec

ROUNDOFF_FLOOR = 1e-15


def _checked_probability(value: complex, s: int, t: int) -> float:
    """Clamp to [0, 1] after checking the value is a probability within 1e-9."""
    if abs(value.imag) > IMAGINARY_RESIDUE_TOL:
        raise NumericContractError(f"P(1,1|{s},{t}) has imaginary residue {value.imag:.3e}")
    p = value.real
    if p < -PROBABILITY_TOL or p > 1.0 + PROBABILITY_TOL:
        raise NumericContractError(f"P(1,1|{s},{t}) = {p:.12g} is not a probability")
    if p < -ROUNDOFF_FLOOR:
        logger.warning(f"Clamping negative probability P(1,1|{s},{t}) = {p:.3e} to 0")
    return min(max(p, 0.0), 1.0)


def _measurement(setup: GameSetup) -> ComplexMatrix:
    return kron(setup.alice_povm.op, setup.bob_povm.op)


def _check_index(setup: GameSetup, s: int, t: int) -> None:
    rows, cols = setup.decomp.shape
    if not (0 <= s < rows and 0 <= t < cols):
        raise ArgumentError(f"Input pair ({s}, {t}) outside the {rows}x{cols} decomposition")


def joint_prob(setup: GameSetup, s: int, t: int) -> float:
    """P(1,1|τ_s, ω_t) = Tr[(A₁ ⊗ B₁)(τ_s ⊗ ρ_AB ⊗ ω_t)].

    Raises:
        ArgumentError: If (s, t) is not a valid input pair
        NumericContractError: If the value leaves [-1e-9, 1 + 1e-9]
    """
    _check_index(setup, s, t)
    full = kron_all(setup.decomp.tau[s].op, setup.shared.op, setup.decomp.omega[t].op)
    return _checked_probability(trace_product(_measurement(setup), full), s, t)


def mdi_value(setup: GameSetup) -> float:
    """I(P) = Σ β[s, t] P(1,1|τ_s, ω_t)."""
    beta = setup.decomp.beta
    return float(sum(beta[s, t] * joint_prob(setup, s, t) for s, t in setup.decomp.index_pairs()))


def mdi_value_fast(decomp: WitnessDecomposition, rho: DensityMatrix) -> float:
    """Tr(Wρ)/(d_A·d_B), equal to ``mdi_value`` under Bell-projector measurements.

    Raises:
        DimensionError: If ``rho`` does not live on d_A ⊗ d_B
    """
    if rho.dim != decomp.d_a * decomp.d_b:
        raise DimensionError(f"State of dimension {rho.dim} does not match the {decomp.d_a}x{decomp.d_b} witness")
    return expectation(witness_from_decomposition(decomp), rho) / (decomp.d_a * decomp.d_b)


def effective_povm(element: PovmElement, share_state: DensityMatrix, side: Side) -> PovmElement:
    """Contract a party's element with its share of a product state.

    Alice's element acts on (input ⊗ share) and Bob's on (share ⊗ input); the
    result is Tr_share[element · (I ⊗ σ)] on the input alone, so that
    Tr[(A′ ⊗ B′)(τ ⊗ ω)] reproduces P(1,1) for σ_A ⊗ σ_B shared.

    Raises:
        DimensionError: If the share dimension does not divide the element's
        NumericContractError: If the contraction is not a valid POVM element
    """
    d_share = share_state.dim
    if element.dim % d_share:
        raise DimensionError(f"Share of dimension {d_share} does not divide an element of dimension {element.dim}")
    d_in = element.dim // d_share
    eye = np.eye(d_in, dtype=np.complex128)

    if side.input_first():
        dims = DimFactorization((d_in, d_share))
        contracted = partial_trace(element.op @ kron(eye, share_state.op), dims, {0})
    else:
        dims = DimFactorization((d_share, d_in))
        contracted = partial_trace(element.op @ kron(share_state.op, eye), dims, {1})
    return PovmElement((contracted + contracted.conj().T) / 2, DimFactorization((d_in,)))


def noisy_mdi_value(setup: GameSetup, noise: NoiseSpec) -> float:
    """I_Λ(P) = Σ β[s, t] P(1,1|Λ^{st}(τ_s ⊗ ω_t)).

    The channel acts on the joint input, whose output is then placed around
    the shared state in the τ ⊗ ρ ⊗ ω ordering.

    Raises:
        DimensionError: If a non-trivial channel meets inputs other than qubits
    """
    decomp = setup.decomp
    identity = isinstance(noise, IdentityNoise)
    if not identity and (decomp.d_a, decomp.d_b) != (2, 2):
        raise DimensionError(f"Input noise acts on qubit inputs, got {decomp.d_a}x{decomp.d_b}")

    uniform = channel_for(noise) if noise.is_uniform() and not identity else None
    measurement = _measurement(setup)
    input_dims = DimFactorization((decomp.d_a, decomp.d_b))
    embedded_dims = (decomp.d_a, decomp.d_b, setup.alice_share_dim, setup.bob_share_dim)

    total = 0.0
    for s, t in decomp.index_pairs():
        joint = DensityMatrix(kron(decomp.tau[s].op, decomp.omega[t].op), input_dims)
        if identity:
            noisy = joint
        elif uniform is not None:
            noisy = apply_channel(uniform, joint)
        else:
            noisy = apply(noise, s, t, joint)
        full = permute_subsystems(kron(noisy.op, setup.shared.op), embedded_dims, (0, 2, 3, 1))
        total += decomp.beta[s, t] * _checked_probability(trace_product(measurement, full), s, t)
    return float(total)


def modified_witness(decomp: WitnessDecomposition, noise: NoiseSpec) -> WitnessOperator:
    """W′ = Σ β[s, t] Λ(τ_s ⊗ ω_t)ᵀ for a uniform channel Λ.

    Raises:
        ArgumentError: If the noise depends on the input pair
    """
    if not noise.is_uniform():
        raise ArgumentError(f"{noise.noise_kind} noise is not uniform; no single modified witness exists")
    if isinstance(noise, IdentityNoise):
        return witness_from_decomposition(decomp)

    channel = channel_for(noise)
    total = np.zeros((decomp.d_a * decomp.d_b,) * 2, dtype=np.complex128)
    for s, t in decomp.index_pairs():
        total += decomp.beta[s, t] * channel.apply(kron(decomp.tau[s].op, decomp.omega[t].op)).T
    return WitnessOperator(total, decomp.dims)


def bell_projector_setup(decomp: WitnessDecomposition, rho: DensityMatrix) -> GameSetup:
    """Ideal game: both parties project onto |Φ⁺⟩ across their input and share.

    Raises:
        DimensionError: If input and share dimensions differ on either side
    """
    if len(rho.dims) != 2:
        raise DimensionError(f"Shared state must be bipartite, got factors {rho.dims.factors}")
    d_sa, d_sb = rho.dims.factors
    if (decomp.d_a, decomp.d_b) != (d_sa, d_sb):
        raise DimensionError(
            f"Bell projectors need matching input and share dimensions, got inputs "
            f"{decomp.d_a}x{decomp.d_b} and shares {d_sa}x{d_sb}"
        )
    alice = PovmElement(max_entangled(decomp.d_a).op, DimFactorization((decomp.d_a, d_sa)))
    bob = PovmElement(max_entangled(decomp.d_b).op, DimFactorization((d_sb, decomp.d_b)))
    return GameSetup(decomp, rho, alice, bob)
