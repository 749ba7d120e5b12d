# src/core/value_objects/isometry_class.py

import math
from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.core.value_objects.extended_real import ExtendedReal
from src.shared.constants import IsometryKind


@dataclass(frozen=True)
class IsometryClass:
    """
    Classification of a Möbius map.

    ``lam`` is the multiplier (1 for non-hyperbolic maps) and ``log_lambda``
    its logarithm, kept separately so very long words never overflow.
    ``omega`` and ``fixed`` are set for parabolic maps only; ``attracting``
    and ``repelling`` for hyperbolic maps only.
    """

    kind: IsometryKind
    trace: float
    log_lambda: float = 0.0
    omega: Optional[float] = None
    attracting: Optional[ExtendedReal] = None
    repelling: Optional[ExtendedReal] = None
    fixed: Optional[ExtendedReal] = None

    def __post_init__(self):
        if self.kind == IsometryKind.HYPERBOLIC:
            if not self.log_lambda > 0:
                raise ValueError(f"Hyperbolic class needs log_lambda > 0, got {self.log_lambda}")
            if self.attracting is None or self.repelling is None:
                raise ValueError("Hyperbolic class needs both fixed points")
        elif self.log_lambda != 0.0:
            raise ValueError(f"{self.kind.value} class has multiplier 1")

        if self.kind == IsometryKind.PARABOLIC:
            if self.omega is None or self.omega == 0:
                raise ValueError("Parabolic class needs a nonzero translation vector")
            if self.fixed is None:
                raise ValueError("Parabolic class needs its fixed point")

    @property
    def lam(self) -> float:
        """Multiplier λ; ``inf`` if it does not fit in a float."""
        try:
            return math.exp(self.log_lambda)
        except OverflowError:
            return math.inf

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind == IsometryKind.HYPERBOLIC

    @property
    def is_parabolic(self) -> bool:
        return self.kind == IsometryKind.PARABOLIC

    @property
    def has_axis(self) -> bool:
        return self.kind in (IsometryKind.HYPERBOLIC, IsometryKind.PARABOLIC)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'kind': self.kind.value,
            'trace': self.trace,
            'lambda': self.lam,
            'log_lambda': self.log_lambda,
        }
        if self.omega is not None:
            data['omega'] = self.omega
        if self.fixed is not None:
            data['fixed'] = self.fixed.to_json()
        if self.attracting is not None:
            data['attracting'] = self.attracting.to_json()
        if self.repelling is not None:
            data['repelling'] = self.repelling.to_json()
        return data
