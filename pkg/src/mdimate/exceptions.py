"""Error hierarchy shared by the numeric core, the services and the CLI."""


class MdiMateError(Exception):
    """Root of every error raised by mdimate."""


class DimensionError(MdiMateError, ValueError):
    """Operator shapes or subsystem factorizations do not line up."""


class SizeLimitError(DimensionError):
    """A tensor product would exceed the configured dimension cap."""


class ArgumentError(MdiMateError, ValueError):
    """An argument is outside the domain of the operation."""


class ContractViolationError(MdiMateError):
    """An operator does not satisfy the contract of the type it is used as."""


class NumericContractError(ContractViolationError):
    """A computed quantity left its admissible range beyond tolerance."""


class ChannelContractError(ContractViolationError):
    """A channel is not trace preserving or not completely positive."""


class InternalConsistencyError(MdiMateError):
    """Two independent evaluations of the same quantity disagree."""


class EigenConvergenceError(MdiMateError):
    """The Jacobi eigensolver hit its sweep cap."""


class ScanConfigError(MdiMateError):
    """A scan or threshold configuration names an unknown kind or parameter."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field
