"""
Configuration loaded from the environment and an optional .env file
"""

import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigError

VARIABLES = ("u", "y", "tau2")
FORMATS = ("text", "json", "latex")


@dataclass(frozen=True)
class Settings:
    """Runtime defaults; CLI flags override individual fields"""

    prec: int = 256
    cutoff: int = 150
    jobs: int = 1
    fmt: str = "text"
    var: str = "y"
    checkpoint_dir: Path = Path("checkpoints")
    log_dir: Path = Path("logs")
    data_dir: Path = Path("data")
    table_size: int = 256
    checkpoint_every: int = 10_000

    def __post_init__(self):
        if self.prec < 53:
            raise ConfigError(f"precision must be at least 53 bits, got {self.prec}")
        if self.cutoff < 8:
            raise ConfigError(f"lattice cutoff must be at least 8, got {self.cutoff}")
        if self.jobs < 1:
            raise ConfigError(f"job count must be positive, got {self.jobs}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"format must be one of {FORMATS}, got {self.fmt!r}")
        if self.var not in VARIABLES:
            raise ConfigError(f"variable must be one of {VARIABLES}, got {self.var!r}")
        if self.table_size < 16:
            raise ConfigError(f"table size must be at least 16, got {self.table_size}")
        if self.checkpoint_every < 1:
            raise ConfigError("checkpoint interval must be positive")

    def with_overrides(self, **kwargs) -> "Settings":
        """Return a copy with every non-None keyword applied"""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")


def load_settings(env_file: Optional[str] = None) -> Settings:
    """
    Build Settings from the environment

    Args:
        env_file: Optional path to a .env file (default: search upwards from cwd)

    Returns:
        Validated settings
    """
    load_dotenv(env_file)

    return Settings(
        prec=_int_env("MGF_PREC", 256),
        cutoff=_int_env("MGF_CUTOFF", 150),
        jobs=_int_env("MGF_JOBS", os.cpu_count() or 1),
        fmt=os.getenv("MGF_FORMAT", "text"),
        var=os.getenv("MGF_VAR", "y"),
        checkpoint_dir=Path(os.getenv("MGF_CHECKPOINT_DIR", "checkpoints")),
        log_dir=Path(os.getenv("MGF_LOG_DIR", "logs")),
        data_dir=Path(os.getenv("MGF_DATA_DIR", "data")),
        table_size=_int_env("MGF_TABLE_SIZE", 256),
        checkpoint_every=_int_env("MGF_CHECKPOINT_EVERY", 10_000),
    )
