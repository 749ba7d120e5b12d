# src/core/entities/estimates.py

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from src.core.entities.word import Word
from src.shared.constants import DistanceMethod, EstimateKind, LemmaName


@dataclass(frozen=True)
class TraceEntry:
    """Estimate value reached using words up to ``cutoff`` letters."""

    cutoff: int
    value: float
    witness: Optional[Word]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'cutoff': self.cutoff,
            'value': self.value,
            'witness': self.witness.to_list() if self.witness is not None else None,
        }


@dataclass(frozen=True)
class ExponentEstimate:
    """
    Lower bound for an exponent (delta or rho) at a word-length cutoff.

    ``value`` is max(1, sup of sampled ratios); ``witness`` attains the sup,
    the shortlex-least word among maximizers. For rho, elements with
    |ω_source| < 1 give upper bounds on the exponent instead; the least such
    bound is kept in ``upper_bound``.
    """

    kind: EstimateKind
    value: float
    witness: Optional[Word]
    cutoff: int
    trace: Tuple[TraceEntry, ...] = ()
    samples: int = 0
    depth: Optional[int] = None
    upper_bound: Optional[float] = None
    upper_witness: Optional[Word] = None
    upper_constraints: int = 0

    def __post_init__(self):
        if self.value < 1.0:
            raise ValueError(f"Exponent estimate must be >= 1, got {self.value}")
        values = [entry.value for entry in self.trace]
        if any(later < earlier for earlier, later in zip(values, values[1:])):
            raise ValueError("Estimate trace must be nondecreasing in cutoff")

    @property
    def violated(self) -> bool:
        """True when some |ω_source| < 1 element caps the exponent below the sup."""
        return self.upper_bound is not None and self.upper_bound < self.value

    def trace_value(self, cutoff: int) -> float:
        for entry in self.trace:
            if entry.cutoff == cutoff:
                return entry.value
        raise KeyError(cutoff)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'kind': self.kind.value,
            'value': self.value,
            'witness': self.witness.to_list() if self.witness is not None else None,
            'cutoff': self.cutoff,
            'samples': self.samples,
            'trace': [entry.to_dict() for entry in self.trace],
        }
        if self.kind == EstimateKind.RHO:
            data.update({
                'depth': self.depth,
                'upper_bound': self.upper_bound,
                'upper_witness': (
                    self.upper_witness.to_list() if self.upper_witness is not None else None
                ),
                'upper_constraints': self.upper_constraints,
                'violated': self.violated,
            })
        return data


@dataclass(frozen=True)
class DistanceReport:
    """
    Thurston and length-spectrum distance estimates between two marked groups.

    ``d_L_forward``/``d_L_backward`` come from the delta estimates unless the
    method is rho alone. ``gap`` compares delta and rho in the forward
    direction when both were computed.
    """

    d_L_forward: float
    d_L_backward: float
    d_ls: float
    method: DistanceMethod
    cutoff: int
    depth: Optional[int] = None
    gap: Optional[float] = None
    gap_trace: Tuple[Tuple[int, float], ...] = ()
    delta_forward: Optional[ExponentEstimate] = None
    delta_backward: Optional[ExponentEstimate] = None
    rho_forward: Optional[ExponentEstimate] = None
    rho_backward: Optional[ExponentEstimate] = None

    def __post_init__(self):
        for name in ('d_L_forward', 'd_L_backward', 'd_ls'):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} cannot be negative")
        if self.d_ls != max(self.d_L_forward, self.d_L_backward):
            raise ValueError("d_ls must equal max(d_L_forward, d_L_backward)")

    @property
    def delta_sym(self) -> Optional[float]:
        if self.delta_forward is None or self.delta_backward is None:
            return None
        return max(self.delta_forward.value, self.delta_backward.value)

    @property
    def rho_sym(self) -> Optional[float]:
        if self.rho_forward is None or self.rho_backward is None:
            return None
        return max(self.rho_forward.value, self.rho_backward.value)

    def to_dict(self) -> Dict[str, Any]:
        estimates = {
            name: getattr(self, name).to_dict()
            for name in ('delta_forward', 'delta_backward', 'rho_forward', 'rho_backward')
            if getattr(self, name) is not None
        }
        return {
            'd_L_forward': self.d_L_forward,
            'd_L_backward': self.d_L_backward,
            'd_ls': self.d_ls,
            'method': self.method.value,
            'cutoff': self.cutoff,
            'depth': self.depth,
            'gap': self.gap,
            'gap_trace': [{'cutoff': c, 'gap': g} for c, g in self.gap_trace],
            'delta_sym': self.delta_sym,
            'rho_sym': self.rho_sym,
            'estimates': estimates,
        }


@dataclass
class VerificationReport:
    """Outcome of one executable identity check."""

    lemma: LemmaName
    passed: bool
    residual: float
    details: Dict[str, Any] = field(default_factory=dict)
    series: List[float] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'lemma': self.lemma.value,
            'status': 'PASS' if self.passed else 'FAIL',
            'residual': self.residual,
            'details': self.details,
            'series': list(self.series),
        }
