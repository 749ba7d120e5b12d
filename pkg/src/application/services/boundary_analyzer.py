# src/application/services/boundary_analyzer.py

import logging
import math
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from config.settings import settings
from src.application.services.word_enumerator import WordEnumerator
from src.core.entities.boundary import (
    BoundarySample,
    CompatibilityReport,
    CrossRatioNormEstimate,
    EquivarianceReport,
    HolderFit,
    HolderProfile,
)
from src.core.entities.marked_group import MarkedIsomorphism
from src.core.entities.word import Word
from src.core.value_objects.extended_real import ExtendedReal
from src.core.value_objects.isometry_class import IsometryClass
from src.core.value_objects.moebius_map import MoebiusMap, cross_ratio
from src.shared.constants import (
    HOLDER_BAND,
    EnumerationMode,
    SampleKind,
)
from src.shared.utils.exceptions import (
    DegenerateTupleError,
    DegenerateWindowError,
    EllipticInputError,
    InsufficientSamplesError,
    ValidationError,
)
from src.shared.utils.math_utils import least_squares_line

logger = logging.getLogger(__name__)

ClassifiedWord = Tuple[Word, IsometryClass, IsometryClass]


def classified_representatives(iso: MarkedIsomorphism, max_len: int) -> List[ClassifiedWord]:
    """Cyclic representatives with their classes on both sides, type preservation checked."""
    result = []
    enumerator = WordEnumerator(iso.rank)
    for word, (m_source, m_target) in enumerator.enumerate_with_images(
            (iso.source, iso.target), max_len, EnumerationMode.CYCLIC_REPS):
        if word.is_identity:
            continue
        source = MoebiusMap.from_matrix(m_source).classify()
        target = MoebiusMap.from_matrix(m_target).classify()
        iso.check_type(word, source.kind, target.kind)
        result.append((word, source, target))
    return result


# Boundary samples

def boundary_samples(iso: MarkedIsomorphism, max_len: int,
                     include_parabolic: bool = False) -> List[BoundarySample]:
    """
    Pairs (P(w), P(j(w))) over cyclic representatives hyperbolic on both
    sides, deduplicated by x and sorted with ∞ last. With
    ``include_parabolic`` the fixed points of parabolic representatives are
    added as well.
    """
    tol = settings.tolerances.TOL_PT
    candidates: List[BoundarySample] = []
    for word, source, target in classified_representatives(iso, max_len):
        if source.is_hyperbolic and target.is_hyperbolic:
            candidates.append(BoundarySample(word, source.attracting, target.attracting,
                                             SampleKind.ATTRACTING_HYP))
        elif include_parabolic and source.is_parabolic and target.is_parabolic:
            candidates.append(BoundarySample(word, source.fixed, target.fixed,
                                             SampleKind.PARABOLIC_FIX))

    # Shortlex order decides which word represents a repeated point
    candidates.sort(key=lambda s: (s.x.sort_key(), s.word.sort_key()))
    samples: List[BoundarySample] = []
    for sample in candidates:
        if samples and samples[-1].x.is_close(sample.x, tol):
            if sample.word.sort_key() < samples[-1].word.sort_key():
                samples[-1] = sample
            continue
        samples.append(sample)
    logger.info(f"Collected {len(samples)} boundary samples up to length {max_len}")
    return samples


# Hölder fits

def _flip(point: ExtendedReal, flip: bool) -> ExtendedReal:
    return point.reciprocal() if flip else point


def holder_fit(samples: Sequence[BoundarySample], anchor_index: int, window: float,
               min_samples: Optional[int] = None) -> HolderFit:
    """
    Log-log least squares of |y - y₀| against |x - x₀| on samples within
    ``window`` of the anchor. An infinite anchor (or image) is moved to 0
    by z ↦ 1/z first.
    """
    required = min_samples if min_samples is not None else settings.HOLDER_MIN_SAMPLES
    if not 0 <= anchor_index < len(samples):
        raise ValidationError(f"anchor index {anchor_index} out of range", field="anchor")
    if window <= 0:
        raise ValidationError("window must be positive", field="window")

    anchor = samples[anchor_index]
    flip_x = anchor.x.is_infinite
    flip_y = anchor.y.is_infinite
    x0 = _flip(anchor.x, flip_x).value
    y0 = _flip(anchor.y, flip_y).value

    du_list, dv_list = [], []
    for index, sample in enumerate(samples):
        if index == anchor_index:
            continue
        u = _flip(sample.x, flip_x)
        v = _flip(sample.y, flip_y)
        if u.is_infinite or v.is_infinite:
            continue
        du = abs(u.value - x0)
        dv = abs(v.value - y0)
        if 0.0 < du <= window and dv > 0.0:
            du_list.append(du)
            dv_list.append(dv)

    if len(du_list) < required:
        raise InsufficientSamplesError(len(du_list), required)

    du = np.asarray(du_list)
    dv = np.asarray(dv_list)
    log_du = np.log(du)
    log_dv = np.log(dv)
    if float(log_du.max() - log_du.min()) <= settings.tolerances.TOL_PT:
        raise DegenerateWindowError(
            f"All {len(du_list)} window samples sit at the same distance from the anchor"
        )

    slope, _, rms = least_squares_line(log_du, log_dv)
    if slope <= 0:
        logger.warning(f"Non-positive log-log slope {slope:.6g} at anchor {anchor.x}")
        alpha = float(np.finfo(float).eps)
    else:
        # A slope s > 1 violates |x - x₀|^(1/α)/C ≤ |y - y₀| for every α > 1/s
        alpha = min(slope, 1.0 / slope)

    constant = max(
        1.0,
        float(np.max(dv / np.power(du, alpha))),
        float(np.max(np.power(du, 1.0 / alpha) / dv)),
    )
    return HolderFit(
        alpha_est=alpha,
        inv_alpha_est=max(1.0, 1.0 / alpha),
        anchor=anchor.x,
        window=window,
        constant_C=constant,
        residual=rms,
        n_samples=len(du_list),
        slope=slope,
    )


def evenly_spaced_anchors(n_samples: int, count: int) -> List[int]:
    if n_samples == 0 or count <= 0:
        return []
    count = min(count, n_samples)
    return sorted({int(round(i * (n_samples - 1) / max(1, count - 1))) for i in range(count)})


def holder_profile(samples: Sequence[BoundarySample], anchors: Sequence[int], window: float,
                   reference: Optional[float] = None) -> HolderProfile:
    """Fits at several anchors; anchors without enough window samples are skipped."""
    fits, skipped = [], []
    for index in anchors:
        try:
            fits.append(holder_fit(samples, index, window))
        except (InsufficientSamplesError, DegenerateWindowError) as exc:
            logger.debug(f"Skipping anchor {index}: {exc}")
            skipped.append(index)
    return HolderProfile(tuple(fits), tuple(skipped), reference, HOLDER_BAND)


# Axis intersections

def _endpoint_key(point: ExtendedReal) -> float:
    return math.inf if point.is_infinite else point.value


def _strictly_between(point: ExtendedReal, low: float, high: float) -> bool:
    key = _endpoint_key(point)
    return low < key < high


def axes_intersect(first: IsometryClass, second: IsometryClass) -> bool:
    """
    Whether the closed axes meet: hyperbolic axes as geodesics with their
    endpoints, a parabolic axis as its fixed point.
    """
    for klass in (first, second):
        if not klass.has_axis:
            raise EllipticInputError(f"{klass.kind.value} map has no axis")
    tol = settings.tolerances.TOL_PT

    if first.is_parabolic and second.is_parabolic:
        return first.fixed.is_close(second.fixed, tol)
    if first.is_parabolic or second.is_parabolic:
        point, axis = (first, second) if first.is_parabolic else (second, first)
        return point.fixed.is_close(axis.attracting, tol) or point.fixed.is_close(axis.repelling, tol)

    ends_first = (first.attracting, first.repelling)
    ends_second = (second.attracting, second.repelling)
    for p in ends_first:
        for q in ends_second:
            if p.is_close(q, tol):
                return True
    low, high = sorted(_endpoint_key(p) for p in ends_first)
    inside = sum(_strictly_between(q, low, high) for q in ends_second)
    return inside == 1


def find_axis_violations(source_classes: Sequence[IsometryClass],
                         target_classes: Sequence[IsometryClass],
                         max_pairs: Optional[int] = None) -> Tuple[List[Tuple[int, int]], int, bool]:
    """
    Index pairs whose axes meet on exactly one side.

    Returns (violations, pairs checked, truncated).
    """
    if len(source_classes) != len(target_classes):
        raise ValidationError("class lists differ in length", field="target_classes")
    cap = max_pairs if max_pairs is not None else settings.MAX_PAIRS
    violations = []
    checked = 0
    truncated = False
    for i, j in combinations(range(len(source_classes)), 2):
        if checked >= cap:
            truncated = True
            break
        checked += 1
        source_meet = axes_intersect(source_classes[i], source_classes[j])
        target_meet = axes_intersect(target_classes[i], target_classes[j])
        if source_meet != target_meet:
            violations.append((i, j))
    return violations, checked, truncated


def check_compatibility(iso: MarkedIsomorphism, max_len: int,
                        max_pairs: Optional[int] = None) -> CompatibilityReport:
    """Axis-intersection pattern of cyclic representatives compared across the marking."""
    entries = [
        (word, source, target)
        for word, source, target in classified_representatives(iso, max_len)
        if source.has_axis and target.has_axis
    ]
    violations, checked, truncated = find_axis_violations(
        [source for _, source, _ in entries],
        [target for _, _, target in entries],
        max_pairs,
    )
    if truncated:
        logger.warning(f"Compatibility check stopped after {checked} pairs")
    pairs = tuple((entries[i][0], entries[j][0]) for i, j in violations)
    if pairs:
        logger.warning(f"{len(pairs)} axis-intersection violations up to length {max_len}")
    return CompatibilityReport(checked, pairs, truncated)


# Cross-ratio norms

def _log_abs_cross_ratio(points: Sequence[ExtendedReal]) -> Optional[float]:
    try:
        value = cross_ratio(*points)
    except DegenerateTupleError:
        return None
    if value == 0.0:
        return None
    return math.log(abs(value))


def cross_ratio_norm(iso: MarkedIsomorphism, max_len: int, n_tuples: int, seed: int,
                     samples: Optional[Sequence[BoundarySample]] = None) -> CrossRatioNormEstimate:
    """
    Seeded lower bounds for the cross-ratio norm and the length-spectrum
    norm of the sampled boundary map. The length-spectrum tuples
    (g(s), s, N(g), P(g)) join the cross-ratio pool, so ls <= cr holds for
    the sampled sups.
    """
    if samples is None:
        samples = boundary_samples(iso, max_len)
    if len(samples) < 4:
        raise InsufficientSamplesError(len(samples), 4)
    tol_cr = settings.tolerances.TOL_CR
    rng = np.random.default_rng(seed)

    ratios_cr: List[float] = []
    for _ in range(n_tuples):
        indices = np.sort(rng.choice(len(samples), size=4, replace=False))
        chosen = [samples[int(i)] for i in indices]
        denominator = _log_abs_cross_ratio([s.x for s in chosen])
        numerator = _log_abs_cross_ratio([s.y for s in chosen])
        if denominator is None or numerator is None or abs(denominator) < tol_cr:
            continue
        ratios_cr.append(abs(numerator) / abs(denominator))

    ratios_ls: List[float] = []
    for word, source, target in classified_representatives(iso, max_len):
        if not (source.is_hyperbolic and target.is_hyperbolic):
            continue
        base = samples[int(rng.integers(len(samples)))]
        if base.x.is_close(source.attracting, settings.tolerances.TOL_PT) or \
                base.x.is_close(source.repelling, settings.tolerances.TOL_PT):
            continue
        g_source = iso.source.evaluate(word)
        g_target = iso.target.evaluate(word)
        denominator = _log_abs_cross_ratio(
            [g_source.apply(base.x), base.x, source.repelling, source.attracting])
        numerator = _log_abs_cross_ratio(
            [g_target.apply(base.y), base.y, target.repelling, target.attracting])
        if denominator is None or numerator is None or abs(denominator) < tol_cr:
            continue
        ratios_ls.append(abs(numerator) / abs(denominator))

    pool = ratios_cr + ratios_ls
    if not pool:
        raise InsufficientSamplesError(0, 1)
    estimate = CrossRatioNormEstimate(
        cr_norm_lb=max(pool),
        ls_norm_lb=max(ratios_ls) if ratios_ls else 1.0,
        cr_tuples=len(pool),
        ls_tuples=len(ratios_ls),
        seed=seed,
    )
    logger.info(
        f"Cross-ratio norm >= {estimate.cr_norm_lb:.6g}, length-spectrum norm >= "
        f"{estimate.ls_norm_lb:.6g} (seed {seed})"
    )
    return estimate


# Equivariance

def equivariance_defect(iso: MarkedIsomorphism, samples: Sequence[BoundarySample],
                        n_checks: int, seed: int) -> EquivarianceReport:
    """
    For sampled x = P(w) and a random generator letter g, compare g(x) with
    P(g w g⁻¹) in the source and j(g)(y) with P(j(g w g⁻¹)) in the target.
    """
    hyperbolic = [s for s in samples if s.kind == SampleKind.ATTRACTING_HYP]
    if not hyperbolic:
        raise InsufficientSamplesError(0, 1)
    rng = np.random.default_rng(seed)
    letters = WordEnumerator(iso.rank).letters()
    tol = settings.tolerances.TOL_PT

    max_defect = 0.0
    worst: Tuple = ()
    for _ in range(n_checks):
        sample = hyperbolic[int(rng.integers(len(hyperbolic)))]
        letter = letters[int(rng.integers(len(letters)))]
        conjugate = sample.word.conjugated_by(Word.of(letter))
        moved_x = iso.source.evaluate(Word.of(letter)).apply(sample.x)
        moved_y = iso.target.evaluate(Word.of(letter)).apply(sample.y)
        source_class = iso.source.evaluate(conjugate).classify()
        target_class = iso.target.evaluate(conjugate).classify()
        for moved, expected in ((moved_x, source_class.attracting),
                                (moved_y, target_class.attracting)):
            defect = _point_defect(moved, expected)
            if defect > max_defect:
                max_defect = defect
                worst = (str(conjugate), moved.to_json(), expected.to_json())
    return EquivarianceReport(n_checks, max_defect, math.sqrt(tol), worst)


def _point_defect(first: ExtendedReal, second: ExtendedReal) -> float:
    if first.is_infinite or second.is_infinite:
        return 0.0 if first.is_infinite and second.is_infinite else math.inf
    return abs(first.value - second.value) / max(1.0, abs(first.value), abs(second.value))
