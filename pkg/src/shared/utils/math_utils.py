# src/shared/utils/math_utils.py

from typing import Sequence, Tuple

import numpy as np


def relative_error(value: float, reference: float) -> float:
    """|value - reference| relative to max(1, |reference|)."""
    return abs(value - reference) / max(1.0, abs(reference))


def sign(value: float) -> int:
    """Sign with sign(0) = +1."""
    return -1 if value < 0 else 1


def least_squares_line(xs: Sequence[float], ys: Sequence[float]) -> Tuple[float, float, float]:
    """
    Fit ys ≈ slope * xs + intercept.

    Returns (slope, intercept, rms_residual). Raises ValueError when xs has
    no spread.
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(np.dot(dx, dx))
    if sxx == 0.0:
        raise ValueError("least squares needs at least two distinct abscissae")
    slope = float(np.dot(dx, dy)) / sxx
    intercept = float(y.mean() - slope * x.mean())
    residuals = y - (slope * x + intercept)
    rms = float(np.sqrt(np.mean(residuals * residuals)))
    return slope, intercept, rms


def count_reduced_words(rank: int, max_len: int) -> int:
    """Number of freely reduced words of length <= max_len in a free group of the given rank."""
    total = 1
    layer = 2 * rank
    for _ in range(max_len):
        total += layer
        layer *= 2 * rank - 1
    return total
