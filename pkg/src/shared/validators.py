# src/shared/validators.py

import math
from typing import Any, Dict, List, Mapping, Sequence, Tuple

from src.shared.constants import ERROR_MESSAGES
from src.shared.utils.exceptions import ValidationError


def validate_positive_int(value: Any, field_name: str, minimum: int = 1) -> int:
    """Validate an integer that must be at least ``minimum``."""
    if isinstance(value, bool):
        raise ValidationError(f"expected an integer, got {value!r}", field=field_name)
    try:
        as_int = int(value)
    except (TypeError, ValueError):
        raise ValidationError(f"expected an integer, got {value!r}", field=field_name)
    if isinstance(value, float) and as_int != value:
        raise ValidationError(f"expected an integer, got {value!r}", field=field_name)
    if as_int < minimum:
        raise ValidationError(f"must be >= {minimum}, got {as_int}", field=field_name)
    return as_int


def validate_finite_float(value: Any, field_name: str) -> float:
    if isinstance(value, bool):
        raise ValidationError(f"expected a number, got {value!r}", field=field_name)
    try:
        as_float = float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"expected a number, got {value!r}", field=field_name)
    if not math.isfinite(as_float):
        raise ValidationError(f"must be finite, got {value!r}", field=field_name)
    return as_float


def validate_positive_float(value: Any, field_name: str) -> float:
    as_float = validate_finite_float(value, field_name)
    if as_float <= 0:
        raise ValidationError(f"must be positive, got {as_float}", field=field_name)
    return as_float


def validate_window(value: Any, field_name: str = "window") -> float:
    """Hölder window: a fraction in (0, 1]."""
    window = validate_positive_float(value, field_name)
    if window > 1.0:
        raise ValidationError(f"must be in (0, 1], got {window}", field=field_name)
    return window


def validate_matrix(value: Any, field_name: str) -> Tuple[float, float, float, float]:
    """
    Validate a 2x2 matrix [[a, b], [c, d]] with finite entries and positive
    determinant, returned as the flat tuple (a, b, c, d).
    """
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValidationError(ERROR_MESSAGES['BAD_MATRIX'], field=field_name)
    rows = []
    for row in value:
        if not isinstance(row, (list, tuple)) or len(row) != 2:
            raise ValidationError(ERROR_MESSAGES['BAD_MATRIX'], field=field_name)
        rows.append(row)
    try:
        a, b = (validate_finite_float(v, field_name) for v in rows[0])
        c, d = (validate_finite_float(v, field_name) for v in rows[1])
    except ValidationError:
        raise ValidationError(ERROR_MESSAGES['BAD_MATRIX'], field=field_name)
    det = a * d - b * c
    if det <= 0:
        raise ValidationError(
            f"{ERROR_MESSAGES['NON_POSITIVE_DET']} (got {det:.6g})", field=field_name
        )
    return a, b, c, d


def validate_word(value: Any, field_name: str, rank: int) -> List[int]:
    """A word is a list of nonzero signed generator indices within 1..rank."""
    if not isinstance(value, (list, tuple)):
        raise ValidationError(ERROR_MESSAGES['BAD_WORD'], field=field_name)
    letters = []
    for letter in value:
        if isinstance(letter, bool) or not isinstance(letter, int) or letter == 0:
            raise ValidationError(ERROR_MESSAGES['BAD_WORD'], field=field_name)
        if abs(letter) > rank:
            raise ValidationError(
                f"{ERROR_MESSAGES['LETTER_OUT_OF_RANGE']}: {letter}", field=field_name
            )
        letters.append(letter)
    return letters


def validate_group_payload(payload: Any) -> Dict[str, Any]:
    """
    Check the shape of a group file and return its normalized fields:
    rank, generators as (a, b, c, d) tuples, peripherals as letter lists, label.
    """
    if not isinstance(payload, Mapping):
        raise ValidationError("expected a JSON object", field="root")
    for key in ('rank', 'generators', 'peripherals'):
        if key not in payload:
            raise ValidationError("missing required field", field=key)

    rank = payload['rank']
    if isinstance(rank, bool) or not isinstance(rank, int) or rank < 2:
        raise ValidationError(ERROR_MESSAGES['BAD_RANK'], field="rank")

    generators = payload['generators']
    if not isinstance(generators, list) or len(generators) != rank:
        raise ValidationError(f"expected a list of {rank} matrices", field="generators")
    matrices = [validate_matrix(m, f"generators[{i}]") for i, m in enumerate(generators)]

    peripherals = payload['peripherals']
    if not isinstance(peripherals, list) or not peripherals:
        raise ValidationError(ERROR_MESSAGES['NO_PERIPHERALS'], field="peripherals")
    words = [validate_word(w, f"peripherals[{i}]", rank) for i, w in enumerate(peripherals)]

    label = payload.get('label', "")
    if not isinstance(label, str):
        raise ValidationError("expected a string", field="label")

    return {'rank': rank, 'generators': matrices, 'peripherals': words, 'label': label}


def parse_tolerance_overrides(pairs: Sequence[str]) -> Dict[str, float]:
    """Parse ``KEY=VAL`` strings; key validity is checked against Tolerances later."""
    overrides: Dict[str, float] = {}
    for pair in pairs:
        key, sep, raw = pair.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ValidationError(f"expected KEY=VAL, got {pair!r}", field="--tol")
        overrides[key.upper()] = validate_positive_float(raw.strip(), f"--tol {key}")
    return overrides


def parse_torus_arguments(raw: str) -> Tuple[float, float, str]:
    """``x,y,root`` for builtin:torus; root defaults to plus."""
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if len(parts) not in (2, 3):
        raise ValidationError(f"expected x,y[,root], got {raw!r}", field="builtin:torus")
    x = validate_finite_float(parts[0], "builtin:torus x")
    y = validate_finite_float(parts[1], "builtin:torus y")
    root = parts[2].lower() if len(parts) == 3 else "plus"
    if root not in ("plus", "minus"):
        raise ValidationError(f"root must be plus or minus, got {root!r}", field="builtin:torus")
    return x, y, root
