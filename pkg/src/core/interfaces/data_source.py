# src/core/interfaces/data_source.py

from abc import ABC, abstractmethod
from typing import List

from src.core.entities.marked_group import MarkedGroup


class GroupSource(ABC):
    """Abstract source of marked groups (files or builtin constructors)."""

    @abstractmethod
    def load(self, path: str) -> MarkedGroup:
        """Load a normalized marked group from a path or pseudo-path."""
        pass

    @abstractmethod
    def get_supported_formats(self) -> List[str]:
        pass
