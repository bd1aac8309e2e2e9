from mdimate.utils.settings.core import (
    AppSettings,
    FakeDetectionSettings,
    NumericsSettings,
    ScanSettings,
    VerificationSettings,
)
from mdimate.utils.settings.factory import SettingsFactory, get_numerics_settings, settings_factory

__all__ = [
    "AppSettings",
    "FakeDetectionSettings",
    "NumericsSettings",
    "ScanSettings",
    "VerificationSettings",
    "SettingsFactory",
    "get_numerics_settings",
    "settings_factory",
]
