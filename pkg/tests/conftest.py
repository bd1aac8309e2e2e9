"""Shared fixtures for the unit and integration suites."""

import math

import numpy as np
import pytest

from mdimate.core.sampling import make_rng
from mdimate.core.witnesses import werner_decomposition
from mdimate.domain.entities import WitnessDecomposition
from mdimate.utils.settings import get_numerics_settings

UNIT_AXIS = (1 / math.sqrt(3), 1 / math.sqrt(3), 1 / math.sqrt(3))


@pytest.fixture(autouse=True)
def fresh_numerics_settings():
    """Drop cached numerics settings so monkeypatched env vars take effect."""
    get_numerics_settings.cache_clear()
    yield
    get_numerics_settings.cache_clear()


@pytest.fixture(scope="session")
def werner() -> WitnessDecomposition:
    return werner_decomposition()


@pytest.fixture
def rng() -> np.random.Generator:
    return make_rng(1234)


@pytest.fixture
def fast_verification(monkeypatch):
    """Small trial counts for service and CLI runs of the invariant suites."""
    for name, value in {
        "MDI_VERIFY_ORACLE_TRIALS": "10",
        "MDI_VERIFY_MDI_TRIALS": "10",
        "MDI_VERIFY_ADJOINT_PAIRS": "10",
        "MDI_VERIFY_SEPARABILITY_TRIALS": "20",
        "MDI_VERIFY_NOISY_TRIALS": "5",
    }.items():
        monkeypatch.setenv(name, value)
