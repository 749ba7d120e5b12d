# config/settings.py

import os
from contextlib import contextmanager
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Dict, Iterator

from dotenv import load_dotenv

from src.shared.constants import (
    DEFAULT_DEPTH,
    DEFAULT_HOLDER_WINDOW,
    DEFAULT_MAX_LEN,
    DEFAULT_MAX_PAIRS,
    DEFAULT_N_TUPLES,
    DEFAULT_SEED,
    DEFAULT_WORD_BUDGET,
    HOLDER_MIN_SAMPLES,
)
from src.shared.utils.exceptions import ConfigurationError

# Load environment variables
load_dotenv()


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared by every computation."""

    TOL_DET: float = 1e-12    # determinant renormalization
    TOL_CLASS: float = 1e-9   # parabolic band around |tr| = 2
    TOL_PT: float = 1e-10     # coincidence of boundary points
    TOL_JORG: float = 1e-9    # slack in the Jorgensen screen
    TOL_CR: float = 1e-6      # smallest usable |log cross-ratio|

    @classmethod
    def keys(cls) -> tuple:
        return tuple(f.name for f in fields(cls))

    @classmethod
    def from_env(cls) -> 'Tolerances':
        """Defaults, overridden by environment variables of the same name."""
        values = {}
        for key in cls.keys():
            raw = os.getenv(key)
            if raw is not None:
                values[key] = _parse_tolerance(key, raw)
        return cls(**values)

    def with_overrides(self, overrides: Dict[str, float]) -> 'Tolerances':
        """Return a copy with some tolerances replaced; unknown keys are rejected."""
        normalized = {}
        for key, value in overrides.items():
            name = key.strip().upper()
            if name not in self.keys():
                raise ConfigurationError(
                    f"Unknown tolerance '{key}'. Must be one of: {', '.join(self.keys())}"
                )
            normalized[name] = _parse_tolerance(name, value)
        return replace(self, **normalized)

    def to_dict(self) -> Dict[str, float]:
        return {key: getattr(self, key) for key in self.keys()}


def _parse_tolerance(key: str, raw) -> float:
    try:
        value = float(raw)
    except (TypeError, ValueError):
        raise ConfigurationError(f"Tolerance {key} must be a number, got {raw!r}")
    if value < 0:
        raise ConfigurationError(f"Tolerance {key} cannot be negative, got {value}")
    return value


class Settings:
    """Application settings."""

    # Base paths
    BASE_DIR = Path(__file__).parent.parent  # Goes up from config/ to project root
    DATA_DIR = BASE_DIR / "data"
    GROUPS_DIR = DATA_DIR / "groups"
    LOG_DIR = Path(os.getenv("LOG_DIR", str(BASE_DIR / "logs")))
    OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", str(BASE_DIR / "output")))

    # Estimator configuration
    DEFAULT_MAX_LEN = int(os.getenv("MAX_LEN", str(DEFAULT_MAX_LEN)))
    DEFAULT_DEPTH = int(os.getenv("DEPTH", str(DEFAULT_DEPTH)))
    WORD_BUDGET = int(os.getenv("WORD_BUDGET", str(DEFAULT_WORD_BUDGET)))
    MAX_PAIRS = int(os.getenv("MAX_PAIRS", str(DEFAULT_MAX_PAIRS)))

    # Boundary configuration
    DEFAULT_N_TUPLES = int(os.getenv("N_TUPLES", str(DEFAULT_N_TUPLES)))
    DEFAULT_SEED = int(os.getenv("SEED", str(DEFAULT_SEED)))
    HOLDER_MIN_SAMPLES = int(os.getenv("HOLDER_MIN_SAMPLES", str(HOLDER_MIN_SAMPLES)))
    HOLDER_WINDOW = float(os.getenv("HOLDER_WINDOW", str(DEFAULT_HOLDER_WINDOW)))

    # Performance Configuration
    MAX_WORKERS = int(os.getenv("MAX_WORKERS", "1"))

    # Logging Configuration
    LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO")
    LOG_TO_FILE = os.getenv("LOG_TO_FILE", "False").lower() == "true"
    LOG_TO_CONSOLE = os.getenv("LOG_TO_CONSOLE", "True").lower() == "true"

    def __init__(self):
        self.tolerances = Tolerances.from_env()

    @contextmanager
    def override_tolerances(self, **overrides: float) -> Iterator[Tolerances]:
        """Temporarily replace the active tolerances."""
        previous = self.tolerances
        self.tolerances = previous.with_overrides(overrides)
        try:
            yield self.tolerances
        finally:
            self.tolerances = previous

    @classmethod
    def ensure_directories(cls):
        """Ensure all required directories exist."""
        for directory in [cls.OUTPUT_DIR, cls.LOG_DIR]:
            directory.mkdir(parents=True, exist_ok=True)


# Create settings instance
settings = Settings()
