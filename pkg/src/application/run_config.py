# src/application/run_config.py

from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from config.settings import settings
from src.shared.constants import Command
from src.shared.utils.exceptions import ValidationError


@dataclass(frozen=True)
class RunConfig:
    """
    Everything needed to reproduce a run. Reports embed ``to_dict()`` so
    that convergence numbers always travel with their cutoffs.
    """

    command: Command
    inputs: Tuple[str, ...] = ()
    max_len: int = settings.DEFAULT_MAX_LEN
    depth: int = settings.DEFAULT_DEPTH
    seed: Optional[int] = None
    tolerance_overrides: Dict[str, float] = field(default_factory=dict)
    output: Optional[Path] = None
    format: str = "json"
    options: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.command, Command):
            object.__setattr__(self, 'command', Command(self.command))
        if self.max_len < 1:
            raise ValidationError(f"must be >= 1, got {self.max_len}", field="max_len")
        if self.depth < 1:
            raise ValidationError(f"must be >= 1, got {self.depth}", field="depth")
        if self.format not in ("json", "csv"):
            raise ValidationError(f"must be json or csv, got {self.format!r}", field="format")
        # Unknown keys fail here, before any computation starts
        settings.tolerances.with_overrides(self.tolerance_overrides)
        object.__setattr__(self, 'inputs', tuple(self.inputs))
        object.__setattr__(
            self, 'tolerance_overrides', {k.upper(): v for k, v in self.tolerance_overrides.items()}
        )

    def effective_tolerances(self) -> Dict[str, float]:
        return settings.tolerances.with_overrides(self.tolerance_overrides).to_dict()

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command.value,
            'inputs': list(self.inputs),
            'max_len': self.max_len,
            'depth': self.depth,
            'seed': self.seed,
            'tolerances': self.effective_tolerances(),
            'output': str(self.output) if self.output is not None else None,
            'format': self.format,
            'options': dict(sorted(self.options.items())),
        }
