from typing import Literal

from pydantic import Field

from .base import ABCBaseSettings


class NumericsSettings(ABCBaseSettings):
    """Numeric engine settings"""
    dimension_cap: int = Field(default=64, ge=2, description="Largest total dimension a tensor product may reach")
    eigen_solver: Literal["lapack", "jacobi"] = Field(
        default="lapack", description="Hermitian eigensolver: numpy/LAPACK or cyclic Jacobi"
    )
    jacobi_tolerance: float = Field(default=1e-12, gt=0, description="Off-diagonal Frobenius norm at which Jacobi stops")
    jacobi_max_sweeps: int = Field(default=100, ge=1, description="Sweep cap for the Jacobi solver")

    model_config = ABCBaseSettings.model_config.copy()
    model_config["env_prefix"] = "MDI_NUMERICS_"


class ScanSettings(ABCBaseSettings):
    """Parameter scan settings"""
    default_steps: int = Field(default=101, ge=2, description="Grid points per axis when a config omits steps")
    workers: int = Field(default=1, ge=1, description="Threads used to evaluate grid rows")
    significant_digits: int = Field(default=12, ge=6, le=17, description="Digits written per CSV cell")

    model_config = ABCBaseSettings.model_config.copy()
    model_config["env_prefix"] = "MDI_SCAN_"


class AppSettings(ABCBaseSettings):
    """Application settings"""
    app_name: str = Field(default="mdimate", description="Application name")
    version: str = Field(default="0.1.0", description="Artifact version echoed in provenance")
    log_level: str = Field(default="WARNING", description="Default loguru level for the CLI sink")
    default_seed: int = Field(default=20240101, description="Seed used when none is given")

    model_config = ABCBaseSettings.model_config.copy()
    model_config["env_prefix"] = "MDI_APP_"


class VerificationSettings(ABCBaseSettings):
    """Trial counts of the invariant suites"""
    oracle_trials: int = Field(default=100, ge=1, description="Random states in the fast-oracle comparison")
    mdi_trials: int = Field(default=200, ge=1, description="Random separable games in the MDI property check")
    adjoint_pairs: int = Field(default=100, ge=1, description="Operator pairs per channel in the adjoint identity")
    separability_trials: int = Field(default=1000, ge=1, description="Product operators per channel pushed through Λ⁺")
    noisy_trials: int = Field(default=200, ge=1, description="Random separable games per separability-preserving channel")

    model_config = ABCBaseSettings.model_config.copy()
    model_config["env_prefix"] = "MDI_VERIFY_"


class FakeDetectionSettings(ABCBaseSettings):
    """θ grid of the non-uniform admixture search"""
    polar_steps: int = Field(default=50, ge=2, description="Polar grid points over [0, π]")
    azimuth_steps: int = Field(default=100, ge=1, description="Azimuthal grid points over [0, 2π)")

    model_config = ABCBaseSettings.model_config.copy()
    model_config["env_prefix"] = "MDI_FAKE_"
