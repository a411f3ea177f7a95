"""
Utility functions, configuration and error types
"""

from .config import Settings, load_settings
from .errors import (
    ConfigError,
    ConjectureViolation,
    CrossCheckError,
    DomainError,
    MGFError,
    ResidualPiPowerError,
    UnconvergedError,
    ZetaOneError,
)
from .logging_setup import setup_logging

__all__ = [
    "Settings",
    "load_settings",
    "setup_logging",
    "MGFError",
    "DomainError",
    "ZetaOneError",
    "ResidualPiPowerError",
    "UnconvergedError",
    "ConjectureViolation",
    "CrossCheckError",
    "ConfigError",
]
