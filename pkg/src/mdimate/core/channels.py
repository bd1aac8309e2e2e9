"""
Noise channels acting on the quantum inputs.

Every noise specification is realized as a KrausChannel on the joint
2 ⊗ 2 input space. Affine specs (white noise, admixture, Pauli flips) are
converted to Kraus form here so all channels share one application path.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from mdimate.core.sampling import ginibre, make_rng, random_psd, random_state
from mdimate.core.states import IDENTITY_2, bloch_state, dominant_vector, is_ppt, pauli
from mdimate.core.tensor import ComplexMatrix, DimFactorization, kron, partial_trace, trace_product
from mdimate.core.tolerances import CHANNEL_TRACE_TOL
from mdimate.core.witnesses import werner_inputs
from mdimate.domain.entities import AdjointMap, DensityMatrix, KrausChannel
from mdimate.domain.value_objects import IndexSet, PerpConvention
from mdimate.exceptions import ArgumentError, ChannelContractError, DimensionError
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
)

JOINT_DIMS = DimFactorization((2, 2))
ZERO_TRACE_FLOOR = 1e-12


@dataclass(frozen=True, eq=False)
class SeparabilityVerdict:
    """Result of pushing product operators through an adjoint map."""
    passed: bool
    worst_min_eigenvalue: float
    trials: int
    skipped: int
    counterexample: ComplexMatrix | None = field(default=None)


# ---------------------------------------------------------------- qubit Kraus sets


def depolarizing_kraus(p: float) -> KrausChannel:
    """ρ ↦ pρ + (1 − p)I/2 via √((1+3p)/4)·I and √((1−p)/4)·σ_k."""
    kraus = [math.sqrt((1 + 3 * p) / 4) * IDENTITY_2]
    kraus += [math.sqrt((1 - p) / 4) * pauli(k) for k in (1, 2, 3)]
    return KrausChannel(tuple(kraus), 2, 2, name=f"white({p:g})")


def replacement_kraus(target: DensityMatrix, d_in: int, weight: float = 1.0) -> list[ComplexMatrix]:
    """Kraus operators of X ↦ weight·Tr(X)·target: √(weight·λ_k)|x_k⟩⟨j|."""
    eigenvalues, vectors = np.linalg.eigh(target.op)
    kraus = []
    for lam, x in zip(eigenvalues, vectors.T):
        lam = max(float(lam), 0.0)
        if weight * lam == 0.0:
            continue
        for j in range(d_in):
            basis = np.zeros(d_in, dtype=np.complex128)
            basis[j] = 1.0
            kraus.append(math.sqrt(weight * lam) * np.outer(x, basis))
    return kraus


def admixture_kraus(p: float, state: DensityMatrix) -> KrausChannel:
    """ρ ↦ pρ + (1 − p)X."""
    kraus = [math.sqrt(p) * IDENTITY_2] if p > 0 else []
    kraus += replacement_kraus(state, 2, weight=1 - p)
    return KrausChannel(tuple(kraus), 2, 2, name=f"admixture({p:g})")


def pauli_flip_kraus(k: int, p: float) -> KrausChannel:
    """ρ ↦ pρ + (1 − p)σ_k ρ σ_k."""
    return KrausChannel(
        (math.sqrt(p) * IDENTITY_2, math.sqrt(1 - p) * pauli(k)), 2, 2, name=f"pauli{k}({p:g})"
    )


def amplitude_damping_kraus(eps: float) -> KrausChannel:
    m0 = np.array([[1, 0], [0, math.sqrt(1 - eps)]], dtype=np.complex128)
    m1 = np.array([[0, math.sqrt(eps)], [0, 0]], dtype=np.complex128)
    return KrausChannel((m0, m1), 2, 2, name=f"damping({eps:g})")


def correlated_pauli_kraus(noise: CorrelatedPauli) -> KrausChannel:
    """A_ij = √((1 − m)p_i p_j + m p_j δ_ij) σ_i ⊗ σ_j."""
    kraus = [
        math.sqrt(weight) * kron(pauli(i), pauli(j))
        for (i, j), weight in noise.joint_weights().items()
        if weight > 0
    ]
    return KrausChannel(tuple(kraus), 4, 4, name=f"memory(m={noise.m:g})")


def replacement_channel(target: DensityMatrix, d_in: int, name: str = "replacement") -> KrausChannel:
    return KrausChannel(tuple(replacement_kraus(target, d_in)), d_in, target.dim, name=name)


# ---------------------------------------------------------------- entangling map


def orthogonal_vector(psi: ComplexMatrix, convention: PerpConvention = PerpConvention.PLUS) -> ComplexMatrix:
    """c·(conj(b), −conj(a)) for ψ = (a, b)."""
    a, b = psi
    return convention.phase() * np.array([np.conj(b), -np.conj(a)], dtype=np.complex128)


def entangled_pair_vector(
    psi_s: ComplexMatrix, psi_t: ComplexMatrix, p: float, convention: PerpConvention = PerpConvention.PLUS
) -> ComplexMatrix:
    """|χ⟩ = √((1+p)/2)|ψ_s ψ_t⟩ + √((1−p)/2)|ψ_s⊥ ψ_t⊥⟩."""
    aligned = np.kron(psi_s, psi_t)
    flipped = np.kron(orthogonal_vector(psi_s, convention), orthogonal_vector(psi_t, convention))
    return math.sqrt((1 + p) / 2) * aligned + math.sqrt((1 - p) / 2) * flipped


def entangled_pair_state(noise: EntanglingExample2, joint_input: DensityMatrix) -> DensityMatrix:
    """|χ_st⟩⟨χ_st| built from the pure marginals of a product input.

    Raises:
        ArgumentError: If a marginal is not pure
    """
    tau = DensityMatrix(partial_trace(joint_input.op, JOINT_DIMS, {0}), DimFactorization((2,)))
    omega = DensityMatrix(partial_trace(joint_input.op, JOINT_DIMS, {1}), DimFactorization((2,)))
    chi = entangled_pair_vector(dominant_vector(tau), dominant_vector(omega), noise.p, noise.perp_convention)
    return DensityMatrix(np.outer(chi, chi.conj()), JOINT_DIMS)


# ---------------------------------------------------------------- spec -> channel


def _table_entry(table: list[float], index: int, side: str) -> float:
    if not 0 <= index < len(table):
        raise ArgumentError(f"{side} index {index} outside the probability table of length {len(table)}")
    return table[index]


def channel_for(
    noise: NoiseSpec, s: int = 0, t: int = 0, joint_input: DensityMatrix | None = None
) -> KrausChannel:
    """The channel Λ^{st} acting on the joint 2 ⊗ 2 input.

    Uniform specs ignore ``s`` and ``t``. The entangling map depends on the
    input itself and needs ``joint_input``.
    """
    match noise:
        case IdentityNoise():
            return KrausChannel.identity(4)
        case WhiteNoise(p1=p1, p2=p2):
            return depolarizing_kraus(p1).tensor(depolarizing_kraus(p2))
        case Admixture(p1=p1, p2=p2):
            return admixture_kraus(p1, noise.x_state).tensor(admixture_kraus(p2, noise.y_state))
        case PauliFlip(i=i, j=j, p1=p1, p2=p2):
            return pauli_flip_kraus(i, p1).tensor(pauli_flip_kraus(j, p2))
        case AmplitudeDamping(eps1=eps1, eps2=eps2):
            return amplitude_damping_kraus(eps1).tensor(amplitude_damping_kraus(eps2))
        case CorrelatedPauli():
            return correlated_pauli_kraus(noise)
        case NonUniformExample1():
            theta = bloch_state(noise.theta_vector)
            alice = admixture_kraus(_table_entry(noise.alice_table, s, "Alice"), theta)
            bob = admixture_kraus(_table_entry(noise.bob_table, t, "Bob"), theta)
            return alice.tensor(bob)
        case EntanglingExample2():
            if joint_input is None:
                raise ArgumentError("The entangling map needs the joint input to build |χ_st⟩")
            return replacement_channel(entangled_pair_state(noise, joint_input), 4, name=f"entangling({noise.p:g})")
    raise ArgumentError(f"Unsupported noise specification {noise!r}")


def _checked_output(channel: KrausChannel, joint_input: DensityMatrix) -> DensityMatrix:
    out = channel.apply(joint_input.op)
    drift = abs(np.trace(out) - np.trace(joint_input.op))
    if drift > CHANNEL_TRACE_TOL:
        raise ChannelContractError(f"{channel.name} changed the trace by {drift:.3e}")
    return DensityMatrix(out, joint_input.dims)


def apply(noise: NoiseSpec, s: int, t: int, joint_input: DensityMatrix) -> DensityMatrix:
    """Λ^{st}(joint_input) for a 2 ⊗ 2 input.

    Raises:
        DimensionError: If the input is not on 2 ⊗ 2
        ChannelContractError: If the output trace drifts beyond 1e-9
        ArgumentError: If the entangling map receives non-pure marginals
    """
    if isinstance(noise, IdentityNoise):
        return joint_input
    if joint_input.dims.factors != JOINT_DIMS.factors:
        raise DimensionError(f"Input noise acts on 2⊗2 inputs, got factors {joint_input.dims.factors}")
    return _checked_output(channel_for(noise, s, t, joint_input), joint_input)


def apply_channel(channel: KrausChannel, joint_input: DensityMatrix) -> DensityMatrix:
    """Apply an already built channel with the same trace check as ``apply``."""
    return _checked_output(channel, joint_input)


# ---------------------------------------------------------------- adjoints


def adjoint_channel(ch: KrausChannel) -> AdjointMap:
    """O ↦ Σ M† O M, the map with Tr[O₁·Λ(O₂)] = Tr[Λ⁺(O₁)·O₂]."""
    return ch.adjoint()


def adjoint_identity_deviation(ch: KrausChannel, pairs: int = 100, seed: int = 0) -> float:
    """Largest |Tr[O₁Λ(O₂)] − Tr[Λ⁺(O₁)O₂]| over seeded random operator pairs."""
    adjoint = adjoint_channel(ch)
    worst = 0.0
    for pair in range(pairs):
        rng = make_rng(seed + pair)
        o1 = ginibre(ch.d_out, rng)
        o2 = ginibre(ch.d_in, rng)
        lhs = trace_product(o1, ch.apply(o2))
        rhs = trace_product(adjoint.apply(o1), o2)
        worst = max(worst, abs(lhs - rhs))
    return worst


def adjoint_preserves_separability(noise: NoiseSpec, trials: int = 1000, seed: int = 0) -> SeparabilityVerdict:
    """Check that the adjoint map sends product PSD operators to separable ones.

    Each trial draws A′ ⊗ B′ from random PSD factors (generator seeded with
    ``seed + trial``), applies Λ⁺, normalizes and runs the PPT test.

    Raises:
        ArgumentError: If the noise is not uniform
    """
    if not noise.is_uniform():
        raise ArgumentError(f"{noise.noise_kind} is not uniform; the adjoint test needs a fixed channel")
    channel = channel_for(noise)
    adjoint = adjoint_channel(channel)

    worst = math.inf
    skipped = 0
    counterexample = None
    for trial in range(trials):
        rng = make_rng(seed + trial)
        product = kron(random_psd(2, rng), random_psd(2, rng))
        out = adjoint.apply(product)
        trace = float(np.trace(out).real)
        if trace <= ZERO_TRACE_FLOOR:
            skipped += 1
            continue
        state = DensityMatrix((out + out.conj().T) / (2 * trace), JOINT_DIMS)
        verdict = is_ppt(state)
        worst = min(worst, verdict.min_eigenvalue)
        if not verdict.is_ppt and counterexample is None:
            counterexample = state.op

    if skipped:
        logger.warning(f"{channel.name}: skipped {skipped} zero-trace adjoint samples")
    logger.debug(f"{channel.name}: worst PT eigenvalue over {trials} trials is {worst:.3e}")
    return SeparabilityVerdict(counterexample is None, worst, trials, skipped, counterexample)


# ---------------------------------------------------------------- catalog


def catalog_specs(seed: int = 7) -> dict[str, NoiseSpec]:
    """Representative uniform members of every noise family."""
    rng = make_rng(seed)
    return {
        "identity": IdentityNoise(),
        "white_noise": WhiteNoise(p1=0.3, p2=0.7),
        "admixture": Admixture.from_states(0.4, 0.6, random_state(2, rng), random_state(2, rng)),
        "pauli_same": PauliFlip(i=3, j=3, p1=0.2, p2=0.9),
        "pauli_different": PauliFlip(i=1, j=2, p1=0.6, p2=0.35),
        "amplitude_damping": AmplitudeDamping(eps1=0.25, eps2=0.8),
        "correlated_pauli": CorrelatedPauli(m=0.4, probs=[0.5, 0.3, 0.2]),
        "correlated_pauli_full": CorrelatedPauli(m=0.6, probs=[0.4, 0.3, 0.2, 0.1], index_set=IndexSet.FULL),
    }


def catalog_channels(seed: int = 7) -> dict[str, KrausChannel]:
    """Every cataloged channel, including (s, t) realizations of the non-uniform maps."""
    channels = {name: channel_for(spec) for name, spec in catalog_specs(seed).items()}
    example1 = NonUniformExample1(q=0.7, theta=(0.0, 0.0, 1.0))
    channels["example1_s0_t3"] = channel_for(example1, 0, 3)
    inputs = werner_inputs()
    joint = DensityMatrix(kron(inputs[1].op, inputs[2].op), JOINT_DIMS)
    channels["example2_s1_t2"] = channel_for(EntanglingExample2(p=0.3), 1, 2, joint)
    return channels
