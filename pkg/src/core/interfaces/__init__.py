# src/core/interfaces/__init__.py

from .data_source import GroupSource
from .repository import ReportRepository

__all__ = ['GroupSource', 'ReportRepository']
