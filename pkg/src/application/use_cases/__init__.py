# src/application/use_cases/__init__.py

from .analyze_boundary import AnalyzeBoundaryUseCase, BoundaryAnalysis
from .classify_group import ClassifyGroupUseCase
from .compute_distance import ComputeDistanceUseCase
from .generate_report import GenerateReportUseCase
from .verify_identities import VerifyIdentitiesUseCase

__all__ = [
    'AnalyzeBoundaryUseCase',
    'BoundaryAnalysis',
    'ClassifyGroupUseCase',
    'ComputeDistanceUseCase',
    'GenerateReportUseCase',
    'VerifyIdentitiesUseCase',
]
