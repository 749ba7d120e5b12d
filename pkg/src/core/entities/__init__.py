# src/core/entities/__init__.py

from src.core.entities.boundary import (
    BoundarySample,
    CompatibilityReport,
    CrossRatioNormEstimate,
    EquivarianceReport,
    HolderFit,
    HolderProfile,
)
from src.core.entities.estimates import (
    DistanceReport,
    ExponentEstimate,
    TraceEntry,
    VerificationReport,
)
from src.core.entities.marked_group import MarkedGroup, MarkedIsomorphism
from src.core.entities.word import Word

__all__ = [
    'BoundarySample',
    'CompatibilityReport',
    'CrossRatioNormEstimate',
    'DistanceReport',
    'EquivarianceReport',
    'ExponentEstimate',
    'HolderFit',
    'HolderProfile',
    'MarkedGroup',
    'MarkedIsomorphism',
    'TraceEntry',
    'VerificationReport',
    'Word',
]
