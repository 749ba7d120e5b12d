# src/application/use_cases/compute_distance.py

import logging
from typing import Any, Dict, List, Optional

from src.application.services.spectrum_estimator import SpectrumEstimator
from src.core.entities.estimates import DistanceReport
from src.core.entities.marked_group import MarkedIsomorphism
from src.core.interfaces.data_source import GroupSource
from src.infrastructure.data_sources.group_file_loader import GroupFileLoader
from src.shared.constants import DistanceMethod
from src.shared.utils.math_utils import count_reduced_words

logger = logging.getLogger(__name__)


class ComputeDistanceUseCase:
    """
    Thurston distance estimates between two marked groups given as files
    or builtin pseudo-paths.
    """

    def __init__(self, source: Optional[GroupSource] = None, workers: Optional[int] = None):
        self.source = source or GroupFileLoader()
        self.estimator = SpectrumEstimator(workers)

    def execute(self, source_path: str, target_path: str, max_len: int, depth: int,
                method: DistanceMethod = DistanceMethod.DELTA) -> DistanceReport:
        source = self.source.load(source_path)
        target = self.source.load(target_path)
        iso = MarkedIsomorphism(source, target)
        logger.info(
            f"Distance '{source.label}' -> '{target.label}': method {method.value}, "
            f"max_len {max_len}, {count_reduced_words(iso.rank, max_len)} words per side"
        )
        return self.estimator.distance(iso, max_len, depth, method)

    @staticmethod
    def trace_rows(report: DistanceReport) -> List[Dict[str, Any]]:
        """Convergence table: one row per estimate and cutoff."""
        rows = []
        for name in ('delta_forward', 'delta_backward', 'rho_forward', 'rho_backward'):
            estimate = getattr(report, name)
            if estimate is None:
                continue
            for entry in estimate.trace:
                rows.append({
                    'estimate': name,
                    'cutoff': entry.cutoff,
                    'value': entry.value,
                    'witness': entry.witness.to_list() if entry.witness is not None else None,
                })
        for cutoff, gap in report.gap_trace:
            rows.append({'estimate': 'gap', 'cutoff': cutoff, 'value': gap, 'witness': None})
        return rows
