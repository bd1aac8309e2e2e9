from pathlib import Path
from typing import TypeVar

from loguru import logger
from pydantic_settings import BaseSettings, SettingsConfigDict

T = TypeVar("T", bound="ABCBaseSettings")


DEFAULT_ENV_PATH = Path(".envs")
DEFAULT_ENV_FILE_CANDIDATES = [
    DEFAULT_ENV_PATH.joinpath("mdimate.env"),
    DEFAULT_ENV_PATH.joinpath("local.env"),
]


def find_env_file_if_exists() -> Path | None:
    """
    Look for an env file in the default locations.

    Returns:
        The first existing candidate, or None when settings come from the
        process environment only.
    """
    for env_path in DEFAULT_ENV_FILE_CANDIDATES:
        if env_path.exists():
            logger.info(f"Found env file: {env_path}")
            return env_path
    logger.debug("Loading settings from system environment")
    return None


class ABCBaseSettings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=find_env_file_if_exists(),
        env_file_encoding="utf-8",
        extra="ignore",
        case_sensitive=False,
    )

    @classmethod
    def from_env_file(cls: type[T], env_path: str | Path) -> T:
        """
        Load settings from a specific env file, keeping the subclass prefix.

        Args:
            env_path: Path to the .env file.

        Returns:
            Instance of the calling settings class.

        Raises:
            FileNotFoundError: If the file does not exist.
        """
        env_path = Path(env_path)
        if not env_path.exists():
            raise FileNotFoundError(f"Env file {env_path} does not exist.")

        prefix = cls.model_config.get("env_prefix", "")

        class FileSettings(cls):  # type: ignore[valid-type, misc]
            model_config = SettingsConfigDict(
                env_file=env_path,
                env_file_encoding="utf-8",
                env_prefix=prefix,
                extra="ignore",
                case_sensitive=False,
            )

        return FileSettings()  # type: ignore[return-value]
