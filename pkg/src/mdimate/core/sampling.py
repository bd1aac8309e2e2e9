"""
Seeded random operators for the property suites.

Every sampler takes an explicit ``numpy.random.Generator`` (PCG64 via
``default_rng``); nothing touches global random state.
"""

import numpy as np

from mdimate.core.tensor import ComplexMatrix, DimFactorization, kron
from mdimate.domain.entities import DensityMatrix, PovmElement

POVM_SHIFT = 1e-6


def make_rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def ginibre(d: int, rng: np.random.Generator) -> ComplexMatrix:
    """d×d matrix of independent standard complex Gaussians."""
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def random_psd(d: int, rng: np.random.Generator) -> ComplexMatrix:
    g = ginibre(d, rng)
    return g @ g.conj().T


def random_hermitian(d: int, rng: np.random.Generator) -> ComplexMatrix:
    g = ginibre(d, rng)
    return (g + g.conj().T) / 2


def random_state(d: int, rng: np.random.Generator) -> DensityMatrix:
    """Hilbert-Schmidt distributed state G·G†/Tr(G·G†)."""
    r = random_psd(d, rng)
    return DensityMatrix(r / np.trace(r).real, DimFactorization((d,)))


def random_product_state(d_a: int, d_b: int, rng: np.random.Generator) -> DensityMatrix:
    a = random_state(d_a, rng)
    b = random_state(d_b, rng)
    return DensityMatrix(kron(a.op, b.op), DimFactorization((d_a, d_b)))


def random_separable_state(
    d_a: int, d_b: int, rng: np.random.Generator, components: int = 4
) -> DensityMatrix:
    """Convex mixture of up to ``components`` product states with Dirichlet weights."""
    count = int(rng.integers(1, components + 1))
    weights = rng.dirichlet(np.ones(count))
    mixture = sum(w * random_product_state(d_a, d_b, rng).op for w in weights)
    return DensityMatrix(mixture, DimFactorization((d_a, d_b)))


def random_povm_element(d: int, rng: np.random.Generator, dims: tuple[int, ...] | None = None) -> PovmElement:
    """E = R/(λ_max(R) + δ) for a random PSD R, so 0 <= E <= I."""
    r = random_psd(d, rng)
    largest = float(np.linalg.eigvalsh(r)[-1])
    return PovmElement(r / (largest + POVM_SHIFT), DimFactorization(dims or (d,)))
