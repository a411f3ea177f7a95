"""
Exception hierarchy shared by the library, the scripts and the CLI.

Every class carries the process exit code the CLI reports for it.
"""


class MGFError(Exception):
    """Base class for all toolkit errors"""

    exit_code = 1


class DomainError(MGFError, ValueError):
    """An argument lies outside the domain of an operation"""

    exit_code = 2


class ZetaOneError(MGFError):
    """A term would carry the divergent symbol zeta(1) with nonzero coefficient"""

    exit_code = 3


class ResidualPiPowerError(MGFError):
    """The pi^(2w-2) part of a reduced bottom coefficient did not cancel"""

    exit_code = 3


class CrossCheckError(MGFError):
    """Two independent routes to the same exact quantity disagree"""

    exit_code = 3


class UnconvergedError(MGFError):
    """A numeric routine could not reach the requested tolerance"""

    exit_code = 4

    def __init__(self, message: str, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ConjectureViolation(MGFError):
    """A conjectured identity failed (nonzero X_n or a non-integer gamma_k)"""

    exit_code = 5


class ConfigError(MGFError, ValueError):
    """Invalid configuration value"""

    exit_code = 2
