# src/core/entities/boundary.py

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Tuple

from src.core.entities.word import Word
from src.core.value_objects.extended_real import ExtendedReal
from src.shared.constants import SampleKind


@dataclass(frozen=True)
class BoundarySample:
    """A point x of the source limit set with its image y = φ(x)."""

    word: Word
    x: ExtendedReal
    y: ExtendedReal
    kind: SampleKind = SampleKind.ATTRACTING_HYP

    def to_row(self) -> Dict[str, Any]:
        return {
            'word': str(self.word),
            'x': self.x.to_json(),
            'y': self.y.to_json(),
            'kind': self.kind.value,
        }


def is_monotone(samples: Sequence[BoundarySample]) -> bool:
    """Strictly increasing y along samples sorted by x with ∞ last."""
    ordered = sorted(samples, key=lambda s: s.x.sort_key())
    keys = [s.y.sort_key() for s in ordered]
    return all(earlier < later for earlier, later in zip(keys, keys[1:]))


@dataclass(frozen=True)
class HolderFit:
    """Local Hölder bi-continuity fit |x-x₀|^(1/α)/C ≤ |φ(x)-φ(x₀)| ≤ C|x-x₀|^α."""

    alpha_est: float
    inv_alpha_est: float
    anchor: ExtendedReal
    window: float
    constant_C: float
    residual: float
    n_samples: int
    slope: float

    def __post_init__(self):
        if not 0.0 < self.alpha_est <= 1.0:
            raise ValueError(f"alpha_est must lie in (0, 1], got {self.alpha_est}")
        if self.constant_C < 1.0:
            raise ValueError(f"constant_C must be >= 1, got {self.constant_C}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            'alpha_est': self.alpha_est,
            'inv_alpha_est': self.inv_alpha_est,
            'anchor': self.anchor.to_json(),
            'window': self.window,
            'constant_C': self.constant_C,
            'residual': self.residual,
            'n_samples': self.n_samples,
            'slope': self.slope,
        }


@dataclass(frozen=True)
class HolderProfile:
    """
    Fits over several anchors, compared against a reference dilatation exp(d_ls).

    An exponent valid on the whole limit set has to hold at every anchor, so
    the profile's estimate is the largest 1/α̂ over the fitted anchors.
    """

    fits: Tuple[HolderFit, ...]
    skipped_anchors: Tuple[int, ...]
    reference: Optional[float] = None
    band: float = 0.10

    @property
    def max_inv_alpha(self) -> Optional[float]:
        if not self.fits:
            return None
        return max(fit.inv_alpha_est for fit in self.fits)

    @property
    def within_band(self) -> Optional[bool]:
        if self.reference is None or self.max_inv_alpha is None:
            return None
        return abs(self.max_inv_alpha - self.reference) <= self.band * self.reference

    def to_dict(self) -> Dict[str, Any]:
        return {
            'fits': [fit.to_dict() for fit in self.fits],
            'skipped_anchors': list(self.skipped_anchors),
            'max_inv_alpha': self.max_inv_alpha,
            'reference': self.reference,
            'band': self.band,
            'within_band': self.within_band,
        }


@dataclass(frozen=True)
class CompatibilityReport:
    """Pairs of elements whose axes meet on one side only."""

    pairs_checked: int
    violations: Tuple[Tuple[Word, Word], ...]
    truncated: bool = False

    @property
    def compatible(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'pairs_checked': self.pairs_checked,
            'compatible': self.compatible,
            'truncated': self.truncated,
            'violations': [[first.to_list(), second.to_list()] for first, second in self.violations],
        }


@dataclass(frozen=True)
class CrossRatioNormEstimate:
    """Lower bounds for the cross-ratio norm and the length-spectrum norm of φ."""

    cr_norm_lb: float
    ls_norm_lb: float
    cr_tuples: int
    ls_tuples: int
    seed: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cr_norm_lb': self.cr_norm_lb,
            'ls_norm_lb': self.ls_norm_lb,
            'cr_tuples': self.cr_tuples,
            'ls_tuples': self.ls_tuples,
            'seed': self.seed,
        }


@dataclass(frozen=True)
class EquivarianceReport:
    """Spot-check of φ ∘ g = j(g) ∘ φ on sampled fixed points."""

    checks: int
    max_defect: float
    tolerance: float
    worst: Tuple[Any, ...] = ()

    @property
    def consistent(self) -> bool:
        return self.max_defect <= self.tolerance

    def to_dict(self) -> Dict[str, Any]:
        return {
            'checks': self.checks,
            'max_defect': self.max_defect,
            'tolerance': self.tolerance,
            'consistent': self.consistent,
            'worst': list(self.worst),
        }
