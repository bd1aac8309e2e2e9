"""
Invariant verification suites.

Each suite evaluates one family of identities over seeded random cases and
reports the worst deviation it saw.
"""

import math
from pathlib import Path

from loguru import logger
from neopipe import Err, Ok, Result

from mdimate.core.channels import (
    adjoint_identity_deviation,
    adjoint_preserves_separability,
    catalog_channels,
    catalog_specs,
)
from mdimate.core.game import bell_projector_setup, mdi_value, mdi_value_fast, noisy_mdi_value
from mdimate.core.sampling import make_rng, random_povm_element, random_separable_state, random_state
from mdimate.core.states import werner_state
from mdimate.core.tensor import DimFactorization
from mdimate.core.tolerances import KRAUS_COMPLETENESS_TOL, ORACLE_TOL, PSD_TOL, RECONSTRUCTION_TOL
from mdimate.core.witnesses import verify_decomposition, werner_decomposition, werner_witness
from mdimate.domain.entities import DensityMatrix, GameSetup, WitnessDecomposition
from mdimate.exceptions import MdiMateError
from mdimate.models.verification import InvariantReport, VerificationReport
from mdimate.services.factory import ServiceFactoryABC
from mdimate.utils.settings import AppSettings, VerificationSettings, settings_factory

INJECTED_BETA_FAULT = 1e-3
WERNER_GRID = [k / 10 for k in range(11)]


class VerificationService(ServiceFactoryABC["VerificationService"]):
    """Runs the invariant suites behind the verify command."""

    def __init__(
        self,
        oracle_trials: int = 100,
        mdi_trials: int = 200,
        adjoint_pairs: int = 100,
        separability_trials: int = 1000,
        noisy_trials: int = 200,
        default_seed: int = 20240101,
    ):
        self.oracle_trials = oracle_trials
        self.mdi_trials = mdi_trials
        self.adjoint_pairs = adjoint_pairs
        self.separability_trials = separability_trials
        self.noisy_trials = noisy_trials
        self.default_seed = default_seed

    @classmethod
    def from_settings(cls, trials: VerificationSettings, app: AppSettings) -> "VerificationService":
        return cls(**trials.model_dump(), default_seed=app.default_seed)

    @classmethod
    def create_default(cls) -> "VerificationService":
        return cls.from_settings(
            settings_factory.create_verification_settings(), settings_factory.create_app_settings()
        )

    @classmethod
    def from_env_file(cls, env_path: str | Path) -> "VerificationService":
        return cls.from_settings(VerificationSettings.from_env_file(env_path), AppSettings.from_env_file(env_path))

    # ------------------------------------------------------------ suites

    def check_reconstruction(self, decomp: WitnessDecomposition) -> InvariantReport:
        deviation = verify_decomposition(decomp, werner_witness())
        return InvariantReport(
            name="reconstruction",
            passed=deviation <= RECONSTRUCTION_TOL,
            max_deviation=deviation,
            tolerance=RECONSTRUCTION_TOL,
            detail="max |Σ β τᵀ⊗ωᵀ − W| entry",
        )

    def check_werner_values(self, decomp: WitnessDecomposition) -> InvariantReport:
        worst = 0.0
        for v in WERNER_GRID:
            value = mdi_value(bell_projector_setup(decomp, werner_state(v)))
            worst = max(worst, abs(value - (1 - 3 * v) / 16))
        return InvariantReport(
            name="werner_value",
            passed=worst <= ORACLE_TOL,
            max_deviation=worst,
            tolerance=ORACLE_TOL,
            samples=len(WERNER_GRID),
            detail="|I(P) − (1−3v)/16| for v = 0, 0.1, ..., 1",
        )

    def check_oracle_identity(self, decomp: WitnessDecomposition, seed: int) -> InvariantReport:
        worst = 0.0
        for trial in range(self.oracle_trials):
            rho = DensityMatrix(random_state(4, make_rng(seed + trial)).op, DimFactorization((2, 2)))
            worst = max(worst, abs(mdi_value(bell_projector_setup(decomp, rho)) - mdi_value_fast(decomp, rho)))
        return InvariantReport(
            name="oracle_identity",
            passed=worst <= ORACLE_TOL,
            max_deviation=worst,
            tolerance=ORACLE_TOL,
            samples=self.oracle_trials,
            detail="|full game − Tr(Wρ)/4| over random two-qubit states",
        )

    def _random_game(self, decomp: WitnessDecomposition, seed: int) -> GameSetup:
        rng = make_rng(seed)
        shared = random_separable_state(2, 2, rng)
        alice = random_povm_element(4, rng, dims=(2, 2))
        bob = random_povm_element(4, rng, dims=(2, 2))
        return GameSetup(decomp, shared, alice, bob)

    def check_mdi_property(self, decomp: WitnessDecomposition, seed: int) -> InvariantReport:
        lowest = math.inf
        for trial in range(self.mdi_trials):
            lowest = min(lowest, mdi_value(self._random_game(decomp, seed + trial)))
        return InvariantReport(
            name="measurement_independence",
            passed=lowest >= -PSD_TOL,
            max_deviation=max(0.0, -lowest),
            tolerance=PSD_TOL,
            samples=self.mdi_trials,
            detail=f"lowest I(P) on separable states with arbitrary POVMs: {lowest:.3e}",
        )

    def check_channel_certificates(self, seed: int) -> InvariantReport:
        certificates = [channel.certify() for channel in catalog_channels(seed).values()]
        worst_completeness = max(c.completeness_deviation for c in certificates)
        worst_choi = min(c.choi_min_eigenvalue for c in certificates)
        failing = [c.name for c in certificates if not c.passed]
        return InvariantReport(
            name="channel_cptp",
            passed=not failing,
            max_deviation=max(worst_completeness, max(0.0, -worst_choi)),
            tolerance=KRAUS_COMPLETENESS_TOL,
            samples=len(certificates),
            detail=f"min Choi eigenvalue {worst_choi:.3e}" + (f"; failing {failing}" if failing else ""),
        )

    def check_adjoint_identity(self, seed: int) -> InvariantReport:
        channels = catalog_channels(seed)
        worst = max(adjoint_identity_deviation(ch, self.adjoint_pairs, seed) for ch in channels.values())
        return InvariantReport(
            name="adjoint_identity",
            passed=worst <= ORACLE_TOL,
            max_deviation=worst,
            tolerance=ORACLE_TOL,
            samples=len(channels) * self.adjoint_pairs,
            detail="|Tr[O₁Λ(O₂)] − Tr[Λ⁺(O₁)O₂]|",
        )

    def check_separability_preservation(self, decomp: WitnessDecomposition, seed: int) -> InvariantReport:
        lowest = math.inf
        checked = []
        for name, spec in catalog_specs(seed).items():
            verdict = adjoint_preserves_separability(spec, self.separability_trials, seed)
            if not verdict.passed:
                logger.info(f"{name}: adjoint map breaks product form (PT eigenvalue {verdict.worst_min_eigenvalue:.3e})")
                continue
            checked.append(name)
            for trial in range(self.noisy_trials):
                lowest = min(lowest, noisy_mdi_value(self._random_game(decomp, seed + trial), spec))
        return InvariantReport(
            name="separability_preserving_noise",
            passed=lowest >= -PSD_TOL,
            max_deviation=max(0.0, -lowest),
            tolerance=PSD_TOL,
            samples=len(checked) * self.noisy_trials,
            detail=f"lowest noisy I(P) over {checked}: {lowest:.3e}",
        )

    # ------------------------------------------------------------ entry point

    def run(
        self,
        seed: int | None = None,
        decomposition: WitnessDecomposition | None = None,
        inject_beta_fault: bool = False,
    ) -> Result[VerificationReport, VerificationReport]:
        """Run every suite.

        Args:
            seed: Base seed; trial k of a suite uses seed + k
            decomposition: Decomposition under test, the Werner one by default
            inject_beta_fault: Shift β[0, 0] to exercise the failure path

        Returns:
            Ok(report) when every invariant holds, Err(report) otherwise
        """
        seed = self.default_seed if seed is None else seed
        decomp = decomposition or werner_decomposition()
        if inject_beta_fault:
            logger.warning(f"Injecting a β[0, 0] fault of {INJECTED_BETA_FAULT}")
            decomp = decomp.perturbed(0, 0, INJECTED_BETA_FAULT)

        report = VerificationReport(seed=seed)
        suites = [
            ("reconstruction", lambda: self.check_reconstruction(decomp)),
            ("werner_value", lambda: self.check_werner_values(decomp)),
            ("oracle_identity", lambda: self.check_oracle_identity(decomp, seed)),
            ("measurement_independence", lambda: self.check_mdi_property(decomp, seed)),
            ("channel_cptp", lambda: self.check_channel_certificates(seed)),
            ("adjoint_identity", lambda: self.check_adjoint_identity(seed)),
            ("separability_preserving_noise", lambda: self.check_separability_preservation(decomp, seed)),
        ]
        logger.info(f"Running {len(suites)} invariant suites (seed={seed})")
        for name, suite in suites:
            try:
                result = suite()
            except MdiMateError as e:
                logger.error(f"{name} raised {type(e).__name__}: {e}")
                result = InvariantReport(
                    name=name, passed=False, max_deviation=math.inf, tolerance=0.0, detail=f"{type(e).__name__}: {e}"
                )
            if not result.passed:
                logger.error(f"Invariant {name} failed (max deviation {result.max_deviation:.3e})")
            report.invariants.append(result)

        logger.info(f"Verification finished: {'pass' if report.passed else 'FAIL ' + str(report.failing())}")
        return Ok(report) if report.passed else Err(report)
