"""mdimate - measurement-device-independent entanglement witnesses with noisy quantum inputs."""

__version__ = "0.1.0"
