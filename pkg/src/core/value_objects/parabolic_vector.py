# src/core/value_objects/parabolic_vector.py

import math
from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np


@dataclass(frozen=True)
class ParabolicVector:
    """
    Rank-one factorization of a parabolic map.

    A parabolic map in its trace +2 lift is I + sigma * x xᵀ J with
    J = [[0, 1], [-1, 0]], sigma = ±1. Conjugation W p W⁻¹ replaces x by
    W x, so translation vectors of long conjugates can be read off a
    2-vector. The vector is stored as ``exp(log_scale) * (x1, x2)`` with
    ``max(|x1|, |x2|) == 1`` once transformed, which keeps deep word powers
    finite.
    """

    sigma: int
    x1: float
    x2: float
    log_scale: float = 0.0

    def __post_init__(self):
        if self.sigma not in (1, -1):
            raise ValueError(f"sigma must be ±1, got {self.sigma}")

    @classmethod
    def from_nilpotent(cls, n11: float, n12: float, n21: float) -> 'ParabolicVector':
        """Recover (sigma, x) from the entries of p - I."""
        if abs(n12) >= abs(n21):
            sigma = 1 if n12 > 0 else -1
            x1 = math.sqrt(abs(n12))
            x2 = -n11 / (sigma * x1)
        else:
            sigma = -1 if n21 > 0 else 1
            x2 = math.sqrt(abs(n21))
            x1 = -n11 / (sigma * x2)
        return cls(sigma, x1, x2)

    def transformed(self,
                    matrix: Union[np.ndarray, Sequence[Sequence[float]]]) -> 'ParabolicVector':
        """Vector of W p W⁻¹ for the SL(2, R) matrix W."""
        (a, b), (c, d) = matrix.tolist() if isinstance(matrix, np.ndarray) else matrix
        v1 = a * self.x1 + b * self.x2
        v2 = c * self.x1 + d * self.x2
        scale = max(abs(v1), abs(v2))
        if scale == 0.0:
            raise ValueError("Conjugating matrix is singular")
        return ParabolicVector(self.sigma, v1 / scale, v2 / scale, self.log_scale + math.log(scale))

    def fixed_at_infinity(self, tol: float) -> bool:
        return self.x2 * self.x2 <= tol * max(1.0, self.x1 * self.x1)

    def log_abs_omega(self, tol: float) -> float:
        """log|ω| of the represented parabolic map."""
        component = self.x1 if self.fixed_at_infinity(tol) else self.x2
        return 2.0 * (self.log_scale + math.log(abs(component)))

    def omega_sign(self, tol: float) -> int:
        # ω = sigma * x1² at ∞ and -sigma * x2² otherwise
        return self.sigma if self.fixed_at_infinity(tol) else -self.sigma

    def omega(self, tol: float) -> float:
        return self.omega_sign(tol) * math.exp(self.log_abs_omega(tol))
