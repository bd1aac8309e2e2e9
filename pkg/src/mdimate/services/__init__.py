"""Services package for the verify, fake-detect, scan and threshold workflows."""

from mdimate.services.factory import ServiceFactoryABC
from mdimate.services.fake_detection_service import (
    AdmixtureFinding,
    EntanglingFinding,
    EntanglingReport,
    FakeDetectionService,
)
from mdimate.services.scan_service import ScanService
from mdimate.services.threshold_service import ThresholdService
from mdimate.services.verification_service import VerificationService

__all__ = [
    "AdmixtureFinding",
    "EntanglingFinding",
    "EntanglingReport",
    "FakeDetectionService",
    "ScanService",
    "ServiceFactoryABC",
    "ThresholdService",
    "VerificationService",
]
