# src/shared/utils/formatting.py

import math
from typing import Optional, Sequence, Union

from src.core.value_objects.extended_real import ExtendedReal


def format_float(value: Optional[float], digits: int = 10) -> str:
    """Compact float for tables; None renders as a dash."""
    if value is None:
        return "-"
    if math.isinf(value):
        return "∞" if value > 0 else "-∞"
    return f"{value:.{digits}g}"


def format_point(point: Optional[Union[ExtendedReal, float]], digits: int = 10) -> str:
    if point is None:
        return "-"
    if isinstance(point, ExtendedReal):
        return "∞" if point.is_infinite else format_float(point.value, digits)
    return format_float(point, digits)


def format_word(letters: Sequence[int]) -> str:
    """Signed letters as 'a B' style text: 1 → a, -1 → A, 2 → b, ..."""
    if not letters:
        return "e"
    out = []
    for letter in letters:
        if abs(letter) <= 26:
            char = chr(ord('a') + abs(letter) - 1)
            out.append(char if letter > 0 else char.upper())
        else:
            out.append(str(letter))
    return "".join(out)


def format_status(passed: bool) -> str:
    return "PASS" if passed else "FAIL"
