# src/core/interfaces/repository.py

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from src.core.entities.boundary import BoundarySample


class ReportRepository(ABC):
    """Abstract sink for reports and plot-ready tables."""

    @abstractmethod
    def render_json(self, payload: Dict[str, Any]) -> str:
        """Deterministic JSON text for a report payload."""
        pass

    @abstractmethod
    def save_json(self, payload: Dict[str, Any], path: Optional[Path]) -> str:
        """Write the report to path (stdout when None) and return the text."""
        pass

    @abstractmethod
    def save_trace_csv(self, rows: Sequence[Dict[str, Any]], path: Path) -> None:
        pass

    @abstractmethod
    def save_samples_csv(self, samples: Sequence[BoundarySample], path: Path) -> None:
        pass
