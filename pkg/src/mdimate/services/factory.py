"""Base class for services built through a factory classmethod."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, TypeVar

T = TypeVar("T")


class ServiceFactoryABC(ABC, Generic[T]):
    """
    Every service exposes create_default(), built from the process
    environment, and from_env_file(), built from an explicit .env file.
    """

    @classmethod
    @abstractmethod
    def create_default(cls) -> T:
        """Create an instance configured from the current environment.

        Raises:
            NotImplementedError: If the subclass doesn't implement it
        """
        raise NotImplementedError("Subclasses must implement create_default() factory method")

    @classmethod
    def from_env_file(cls, env_path: str | Path) -> T:
        """Create an instance with settings read from ``env_path``.

        Raises:
            NotImplementedError: If the subclass doesn't implement it
        """
        raise NotImplementedError("Subclasses must implement from_env_file() factory method")
