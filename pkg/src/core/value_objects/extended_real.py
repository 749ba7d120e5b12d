# src/core/value_objects/extended_real.py

import math
from dataclasses import dataclass
from typing import Tuple, Union

from src.shared.constants import INFINITY_TOKEN

Number = Union[int, float]


@dataclass(frozen=True)
class ExtendedReal:
    """
    A point of the extended real line R ∪ {∞}.

    The point at infinity is stored as ``math.inf``; ``-inf`` is folded into
    the same point since the projective line has a single infinity.
    """

    value: float

    def __post_init__(self):
        value = float(self.value)
        if math.isnan(value):
            raise ValueError("ExtendedReal cannot be NaN")
        if math.isinf(value):
            value = math.inf
        object.__setattr__(self, 'value', value + 0.0)

    @classmethod
    def infinity(cls) -> 'ExtendedReal':
        return cls(math.inf)

    @classmethod
    def of(cls, value: Union['ExtendedReal', Number, str]) -> 'ExtendedReal':
        """Coerce a number, the string 'inf' or an ExtendedReal."""
        if isinstance(value, ExtendedReal):
            return value
        if isinstance(value, str):
            if value.strip().lower() in (INFINITY_TOKEN, "infinity", "∞"):
                return cls.infinity()
            return cls(float(value))
        return cls(value)

    @property
    def is_infinite(self) -> bool:
        return math.isinf(self.value)

    @property
    def is_finite(self) -> bool:
        return not self.is_infinite

    def reciprocal(self) -> 'ExtendedReal':
        """z ↦ 1/z, exchanging 0 and ∞."""
        if self.is_infinite:
            return ExtendedReal(0.0)
        if self.value == 0.0:
            return ExtendedReal.infinity()
        return ExtendedReal(1.0 / self.value)

    def is_close(self, other: 'ExtendedReal', tol: float) -> bool:
        """Coincidence test with a tolerance relative to max(1, |x|, |y|)."""
        if self.is_infinite or other.is_infinite:
            return self.is_infinite and other.is_infinite
        scale = max(1.0, abs(self.value), abs(other.value))
        return abs(self.value - other.value) <= tol * scale

    def sort_key(self) -> Tuple[int, float]:
        """Order on the real line with ∞ placed last."""
        if self.is_infinite:
            return (1, 0.0)
        return (0, self.value)

    def to_json(self) -> Union[float, str]:
        if self.is_infinite:
            return INFINITY_TOKEN
        return self.value

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        if self.is_infinite:
            return "∞"
        return f"{self.value:.12g}"


INFINITY = ExtendedReal.infinity()
