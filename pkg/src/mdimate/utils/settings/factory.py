"""
Settings Factory

Creates settings instances on demand. Hot numeric paths read the numerics
settings through the cached accessor below instead of re-parsing the
environment on every call.
"""

from functools import lru_cache

from mdimate.utils.settings.core import (
    AppSettings,
    FakeDetectionSettings,
    NumericsSettings,
    ScanSettings,
    VerificationSettings,
)


class SettingsFactory:
    """Factory for creating settings instances"""

    @staticmethod
    def create_numerics_settings() -> NumericsSettings:
        """Create numeric engine settings instance"""
        return NumericsSettings()

    @staticmethod
    def create_scan_settings() -> ScanSettings:
        """Create scan settings instance"""
        return ScanSettings()

    @staticmethod
    def create_verification_settings() -> VerificationSettings:
        """Create invariant suite settings instance"""
        return VerificationSettings()

    @staticmethod
    def create_fake_detection_settings() -> FakeDetectionSettings:
        """Create fake-detection grid settings instance"""
        return FakeDetectionSettings()

    @staticmethod
    def create_app_settings() -> AppSettings:
        """Create app settings instance"""
        return AppSettings()


@lru_cache(maxsize=1)
def get_numerics_settings() -> NumericsSettings:
    """Numerics settings, read once per process. Call cache_clear() after changing the environment."""
    return SettingsFactory.create_numerics_settings()


settings_factory = SettingsFactory()
