# src/application/services/spectrum_estimator.py

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from config.logging import log_performance
from config.settings import Tolerances, settings
from src.application.services.word_enumerator import WordEnumerator
from src.core.entities.estimates import DistanceReport, ExponentEstimate, TraceEntry
from src.core.entities.marked_group import MarkedIsomorphism
from src.core.entities.word import Word
from src.core.value_objects.moebius_map import MoebiusMap
from src.core.value_objects.parabolic_vector import ParabolicVector
from src.shared.constants import (
    OMEGA_UNIT_BAND,
    DistanceMethod,
    EnumerationMode,
    EstimateKind,
    IsometryKind,
)
from src.shared.utils.exceptions import (
    NoHyperbolicFoundError,
    NoParabolicAboveOneError,
    ValidationError,
)

logger = logging.getLogger(__name__)

Candidate = Tuple[float, Word]
Witness = Union[Word, Callable[[], Word]]


def _better(candidate: Candidate, incumbent: Optional[Candidate], maximize: bool = True) -> bool:
    """Larger (or smaller) value wins; ties go to the shortlex-least word."""
    if incumbent is None:
        return True
    value, word = candidate
    best_value, best_word = incumbent
    if value != best_value:
        return value > best_value if maximize else value < best_value
    return word.sort_key() < best_word.sort_key()


def _may_win(value: float, incumbent: Optional[Candidate], maximize: bool) -> bool:
    if incumbent is None or value == incumbent[0]:
        return True
    return value > incumbent[0] if maximize else value < incumbent[0]


@dataclass
class PartialEstimate:
    """
    Per-length sups of one estimator over a set of words.

    Merging two partials keeps the better candidate per length, so partials
    from disjoint shards combine in any order. Witnesses may be passed as a
    zero-argument callable; it only runs when the value can win.
    """

    kind: EstimateKind
    best_by_length: Dict[int, Candidate] = field(default_factory=dict)
    upper_by_length: Dict[int, Candidate] = field(default_factory=dict)
    samples: int = 0
    upper_constraints: int = 0

    @staticmethod
    def _keep(table: Dict[int, Candidate], length: int, value: float,
              witness: Witness, maximize: bool) -> None:
        incumbent = table.get(length)
        if not _may_win(value, incumbent, maximize):
            return
        word = witness() if callable(witness) else witness
        candidate = (value, word)
        if _better(candidate, incumbent, maximize):
            table[length] = candidate

    def offer(self, length: int, ratio: float, witness: Witness) -> None:
        self.samples += 1
        self._keep(self.best_by_length, length, ratio, witness, maximize=True)

    def offer_upper(self, length: int, bound: float, witness: Witness) -> None:
        self.upper_constraints += 1
        self._keep(self.upper_by_length, length, bound, witness, maximize=False)

    def merge(self, other: 'PartialEstimate') -> 'PartialEstimate':
        merged = PartialEstimate(self.kind, dict(self.best_by_length), dict(self.upper_by_length),
                                 self.samples + other.samples,
                                 self.upper_constraints + other.upper_constraints)
        for length, candidate in other.best_by_length.items():
            if _better(candidate, merged.best_by_length.get(length)):
                merged.best_by_length[length] = candidate
        for length, candidate in other.upper_by_length.items():
            if _better(candidate, merged.upper_by_length.get(length), maximize=False):
                merged.upper_by_length[length] = candidate
        return merged


def merge_estimates(partials: Sequence[PartialEstimate]) -> PartialEstimate:
    """Associative merge of shard partials."""
    if not partials:
        raise ValueError("nothing to merge")
    merged = partials[0]
    for partial in partials[1:]:
        merged = merged.merge(partial)
    return merged


def finalize(partial: PartialEstimate, max_len: int, depth: Optional[int] = None) -> ExponentEstimate:
    """Cumulative trace over cutoffs 1..max_len and the final exponent estimate."""
    trace: List[TraceEntry] = []
    best: Optional[Candidate] = None
    for cutoff in range(0, max_len + 1):
        candidate = partial.best_by_length.get(cutoff)
        if candidate is not None and _better(candidate, best):
            best = candidate
        if cutoff == 0:
            continue
        if best is None or best[0] <= 1.0:
            value = 1.0
        else:
            value = best[0]
        trace.append(TraceEntry(cutoff, value, best[1] if best is not None else None))

    upper: Optional[Candidate] = None
    for candidate in partial.upper_by_length.values():
        if _better(candidate, upper, maximize=False):
            upper = candidate

    final = trace[-1]
    return ExponentEstimate(
        kind=partial.kind,
        value=final.value,
        witness=final.witness,
        cutoff=max_len,
        trace=tuple(trace),
        samples=partial.samples,
        depth=depth,
        upper_bound=upper[0] if upper is not None else None,
        upper_witness=upper[1] if upper is not None else None,
        upper_constraints=partial.upper_constraints,
    )


# Shard workers (module level so they pickle)

def delta_shard(iso: MarkedIsomorphism,
                max_len: int,
                first_letter: Optional[int],
                mode: EnumerationMode = EnumerationMode.CYCLIC_REPS) -> PartialEstimate:
    """Sup of log λ(j(w)) / log λ(w) over words hyperbolic on both sides."""
    partial = PartialEstimate(EstimateKind.DELTA)
    enumerator = WordEnumerator(iso.rank)
    groups = (iso.source, iso.target)
    for word, (m_source, m_target) in enumerator.enumerate_with_images(
            groups, max_len, mode, first_letter):
        if word.is_identity:
            continue
        source = MoebiusMap.from_matrix(m_source)
        target = MoebiusMap.from_matrix(m_target)
        source_kind, target_kind = source.kind(), target.kind()
        iso.check_type(word, source_kind, target_kind)
        if source_kind != IsometryKind.HYPERBOLIC:
            continue
        ratio = target.log_multiplier() / source.log_multiplier()
        partial.offer(len(word), ratio, word)
    return partial


def _offer_parabolic(partial: PartialEstimate, length: int, witness: Witness,
                     source: ParabolicVector, target: ParabolicVector, tol: float) -> None:
    log_source = source.log_abs_omega(tol)
    if abs(log_source) < OMEGA_UNIT_BAND:
        return
    ratio = target.log_abs_omega(tol) / log_source
    if log_source > 0:
        partial.offer(length, ratio, witness)
    else:
        # |ω_t| ≤ |ω_s|^a with log|ω_s| < 0 caps a from above
        partial.offer_upper(length, ratio, witness)


def rho_shard(iso: MarkedIsomorphism,
              max_len: int,
              depth: int,
              first_letter: Optional[int]) -> PartialEstimate:
    """
    Sup of log|ω(j(g))| / log|ω(g)| over parabolic g of two shapes:
    w p w⁻¹ for every peripheral p, and wⁿ g₀ w⁻ⁿ for hyperbolic w, n ≤ depth.

    The loop only touches matrices and vectors; witness words are spelled out
    when a sample can beat the current extremum.
    """
    tol = settings.tolerances.TOL_PT
    partial = PartialEstimate(EstimateKind.RHO)
    enumerator = WordEnumerator(iso.rank)
    groups = (iso.source, iso.target)
    peripheral_vectors = [
        (word, iso.source.peripheral_vector(index), iso.target.peripheral_vector(index))
        for index, word in enumerate(iso.source.peripherals)
    ]
    first_peripheral, g0_source, g0_target = peripheral_vectors[0]

    for word, (m_source, m_target) in enumerator.enumerate_with_images(
            groups, max_len, EnumerationMode.ALL, first_letter):
        length = len(word)
        w_source, w_target = m_source.tolist(), m_target.tolist()
        for peripheral, p_source, p_target in peripheral_vectors:
            _offer_parabolic(
                partial, length, lambda p=peripheral: p.conjugated_by(word),
                p_source.transformed(w_source), p_target.transformed(w_target), tol,
            )

        if word.is_identity:
            continue
        source = MoebiusMap.from_matrix(m_source)
        target = MoebiusMap.from_matrix(m_target)
        source_kind, target_kind = source.kind(), target.kind()
        iso.check_type(word, source_kind, target_kind)
        if source_kind != IsometryKind.HYPERBOLIC:
            continue

        v_source, v_target = g0_source, g0_target
        for n in range(1, depth + 1):
            v_source = v_source.transformed(w_source)
            v_target = v_target.transformed(w_target)
            _offer_parabolic(
                partial, length, lambda n=n: first_peripheral.conjugated_by(word.power(n)),
                v_source, v_target, tol,
            )
    return partial


def _run_shard(task: Tuple[str, MarkedIsomorphism, int, int, Optional[int], Tolerances]) -> PartialEstimate:
    name, iso, max_len, depth, first_letter, tolerances = task
    with settings.override_tolerances(**tolerances.to_dict()):
        if name == EstimateKind.DELTA.value:
            return delta_shard(iso, max_len, first_letter)
        return rho_shard(iso, max_len, depth, first_letter)


class SpectrumEstimator:
    """
    Enumeration-based estimators for the exponents delta_L and rho_L and the
    distances built on them.
    """

    def __init__(self, workers: Optional[int] = None):
        self.workers = workers if workers is not None else settings.MAX_WORKERS
        if self.workers < 1:
            raise ValidationError("workers must be >= 1", field="workers")

    def _collect(self, name: str, iso: MarkedIsomorphism, max_len: int, depth: int) -> PartialEstimate:
        WordEnumerator(iso.rank).check_budget(max_len)
        if self.workers == 1:
            if name == EstimateKind.DELTA.value:
                return delta_shard(iso, max_len, None)
            return rho_shard(iso, max_len, depth, None)

        letters = WordEnumerator(iso.rank).letters()
        tasks = [(name, iso, max_len, depth, letter, settings.tolerances) for letter in letters]
        logger.info(f"Running {name} estimate over {len(tasks)} shards with {self.workers} workers")
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            partials = list(pool.map(_run_shard, tasks))
        return merge_estimates(partials)

    @log_performance(logger)
    def delta_estimate(self, iso: MarkedIsomorphism, max_len: int,
                       mode: EnumerationMode = EnumerationMode.CYCLIC_REPS) -> ExponentEstimate:
        """Lower bound for delta_L(j) from words of length <= max_len."""
        if max_len < 1:
            raise ValidationError("max_len must be >= 1", field="max_len")
        if mode == EnumerationMode.CYCLIC_REPS:
            partial = self._collect(EstimateKind.DELTA.value, iso, max_len, 0)
        else:
            WordEnumerator(iso.rank).check_budget(max_len)
            partial = delta_shard(iso, max_len, None, mode)
        if not partial.best_by_length:
            raise NoHyperbolicFoundError(
                f"No word of length <= {max_len} is hyperbolic in both groups"
            )
        estimate = finalize(partial, max_len)
        logger.info(
            f"delta_L({iso.source.label} -> {iso.target.label}) >= {estimate.value:.12g} "
            f"at cutoff {max_len} (witness {estimate.witness})"
        )
        return estimate

    @log_performance(logger)
    def rho_estimate(self, iso: MarkedIsomorphism, max_len: int, depth: int) -> ExponentEstimate:
        """Lower bound for rho_L(j) from peripheral conjugates."""
        if max_len < 1:
            raise ValidationError("max_len must be >= 1", field="max_len")
        if depth < 1:
            raise ValidationError("depth must be >= 1", field="depth")
        partial = self._collect(EstimateKind.RHO.value, iso, max_len, depth)
        if not partial.best_by_length:
            raise NoParabolicAboveOneError(
                f"Every sampled parabolic has |omega| <= 1 at cutoff {max_len}, depth {depth}; "
                f"increase depth"
            )
        estimate = finalize(partial, max_len, depth)
        if estimate.violated:
            logger.warning(
                f"rho_L upper bound {estimate.upper_bound:.12g} (witness {estimate.upper_witness}) "
                f"is below the sup {estimate.value:.12g}"
            )
        logger.info(
            f"rho_L({iso.source.label} -> {iso.target.label}) >= {estimate.value:.12g} "
            f"at cutoff {max_len}, depth {depth}"
        )
        return estimate

    def distance(self, iso: MarkedIsomorphism, max_len: int, depth: int,
                 method: DistanceMethod = DistanceMethod.DELTA) -> DistanceReport:
        """Thurston distance in both directions and the length-spectrum distance."""
        backward = iso.inverse()
        delta_forward = delta_backward = rho_forward = rho_backward = None

        if method in (DistanceMethod.DELTA, DistanceMethod.BOTH):
            delta_forward = self.delta_estimate(iso, max_len)
            delta_backward = self.delta_estimate(backward, max_len)
        if method in (DistanceMethod.RHO, DistanceMethod.BOTH):
            rho_forward = self.rho_estimate(iso, max_len, depth)
            rho_backward = self.rho_estimate(backward, max_len, depth)

        primary_forward = delta_forward if delta_forward is not None else rho_forward
        primary_backward = delta_backward if delta_backward is not None else rho_backward
        d_forward = math.log(primary_forward.value)
        d_backward = math.log(primary_backward.value)

        gap = None
        gap_trace: Tuple[Tuple[int, float], ...] = ()
        if delta_forward is not None and rho_forward is not None:
            gap = abs(math.log(delta_forward.value) - math.log(rho_forward.value))
            gap_trace = tuple(
                (d.cutoff, abs(math.log(d.value) - math.log(r.value)))
                for d, r in zip(delta_forward.trace, rho_forward.trace)
            )

        report = DistanceReport(
            d_L_forward=d_forward,
            d_L_backward=d_backward,
            d_ls=max(d_forward, d_backward),
            method=method,
            cutoff=max_len,
            depth=depth if rho_forward is not None else None,
            gap=gap,
            gap_trace=gap_trace,
            delta_forward=delta_forward,
            delta_backward=delta_backward,
            rho_forward=rho_forward,
            rho_backward=rho_backward,
        )
        logger.info(
            f"d_L forward {d_forward:.6g}, backward {d_backward:.6g}, d_ls {report.d_ls:.6g}"
        )
        return report


def delta_L_estimate(iso: MarkedIsomorphism, max_len: int) -> ExponentEstimate:
    return SpectrumEstimator().delta_estimate(iso, max_len)


def rho_L_estimate(iso: MarkedIsomorphism, max_len: int, depth: int) -> ExponentEstimate:
    return SpectrumEstimator().rho_estimate(iso, max_len, depth)


def distance(source, target, max_len: int, depth: int,
             method: DistanceMethod = DistanceMethod.DELTA) -> DistanceReport:
    return SpectrumEstimator().distance(MarkedIsomorphism(source, target), max_len, depth, method)
