# src/application/use_cases/analyze_boundary.py

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from config.settings import settings
from src.application.services.boundary_analyzer import (
    boundary_samples,
    check_compatibility,
    cross_ratio_norm,
    equivariance_defect,
    evenly_spaced_anchors,
    holder_profile,
)
from src.application.services.spectrum_estimator import SpectrumEstimator
from src.core.entities.boundary import (
    BoundarySample,
    CompatibilityReport,
    CrossRatioNormEstimate,
    EquivarianceReport,
    HolderProfile,
    is_monotone,
)
from src.core.entities.marked_group import MarkedIsomorphism
from src.core.interfaces.data_source import GroupSource
from src.infrastructure.data_sources.group_file_loader import GroupFileLoader
from src.shared.constants import DEFAULT_HOLDER_ANCHORS, EQUIVARIANCE_CHECKS
from src.shared.utils.exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass
class BoundaryAnalysis:
    samples: List[BoundarySample]
    monotone: bool
    d_ls: float
    profile: HolderProfile
    compatibility: CompatibilityReport
    norm: Optional[CrossRatioNormEstimate] = None
    equivariance: Optional[EquivarianceReport] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'n_samples': len(self.samples),
            'monotone': self.monotone,
            'd_ls': self.d_ls,
            'holder': self.profile.to_dict(),
            'compatibility': self.compatibility.to_dict(),
            'norm': self.norm.to_dict() if self.norm is not None else None,
            'equivariance': self.equivariance.to_dict() if self.equivariance is not None else None,
        }


class AnalyzeBoundaryUseCase:
    """
    Sampled boundary map between two marked groups: monotonicity, Hölder
    fits against exp(d_ls), axis compatibility and, when seeded,
    cross-ratio norms and an equivariance spot-check.
    """

    def __init__(self, source: Optional[GroupSource] = None, workers: Optional[int] = None):
        self.source = source or GroupFileLoader()
        self.estimator = SpectrumEstimator(workers)

    def execute(self, source_path: str, target_path: str, max_len: int,
                anchors: Sequence[int] = (), window: Optional[float] = None,
                norm: bool = False, seed: Optional[int] = None,
                n_tuples: Optional[int] = None) -> BoundaryAnalysis:
        if norm and seed is None:
            raise ValidationError("a seed is required for norm estimates", field="--seed")
        iso = MarkedIsomorphism(self.source.load(source_path), self.source.load(target_path))
        return self.analyze(iso, max_len, anchors, window, norm, seed, n_tuples)

    def analyze(self, iso: MarkedIsomorphism, max_len: int, anchors: Sequence[int] = (),
                window: Optional[float] = None, norm: bool = False, seed: Optional[int] = None,
                n_tuples: Optional[int] = None) -> BoundaryAnalysis:
        window = window if window is not None else settings.HOLDER_WINDOW
        samples = boundary_samples(iso, max_len)
        monotone = is_monotone(samples)
        if not monotone:
            logger.warning(f"Sampled boundary map is not monotone at max_len {max_len}")

        forward = self.estimator.delta_estimate(iso, max_len)
        backward = self.estimator.delta_estimate(iso.inverse(), max_len)
        d_ls = max(math.log(forward.value), math.log(backward.value))

        anchor_list = list(anchors) or evenly_spaced_anchors(len(samples), DEFAULT_HOLDER_ANCHORS)
        profile = holder_profile(samples, anchor_list, window, reference=math.exp(d_ls))
        compatibility = check_compatibility(iso, max_len, settings.MAX_PAIRS)

        norm_estimate = equivariance = None
        if norm:
            n_tuples = n_tuples if n_tuples is not None else settings.DEFAULT_N_TUPLES
            norm_estimate = cross_ratio_norm(iso, max_len, n_tuples, seed, samples=samples)
            equivariance = equivariance_defect(iso, samples, EQUIVARIANCE_CHECKS, seed)

        logger.info(
            f"Boundary analysis: {len(samples)} samples, {len(profile.fits)} fits, "
            f"compatible={compatibility.compatible}"
        )
        return BoundaryAnalysis(samples, monotone, d_ls, profile, compatibility,
                                norm_estimate, equivariance)
