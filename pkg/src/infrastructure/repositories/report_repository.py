# src/infrastructure/repositories/report_repository.py

import json
import logging
import math
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

import numpy as np
import pandas as pd

from src.core.entities.boundary import BoundarySample
from src.core.entities.word import Word
from src.core.interfaces.repository import ReportRepository
from src.core.value_objects.extended_real import ExtendedReal
from src.shared.constants import INFINITY_TOKEN, SAMPLE_CSV_COLUMNS, TRACE_CSV_COLUMNS
from src.shared.utils.exceptions import DataSourceError

logger = logging.getLogger(__name__)


def to_json_compatible(value: Any) -> Any:
    """Recursively convert report payloads into plain JSON values; ∞ becomes "inf"."""
    if isinstance(value, dict):
        return {str(k): to_json_compatible(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_json_compatible(v) for v in value]
    if isinstance(value, ExtendedReal):
        return value.to_json()
    if isinstance(value, Word):
        return value.to_list()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Path):
        return str(value)
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return None
        if math.isinf(value):
            return INFINITY_TOKEN if value > 0 else f"-{INFINITY_TOKEN}"
        return value
    return value


class JsonCsvReportRepository(ReportRepository):
    """
    Writes reports as sorted-key JSON and tables as CSV
    (header row, '.' decimal separator, LF line endings).
    """

    def __init__(self, indent: int = 2):
        self.indent = indent

    def render_json(self, payload: Dict[str, Any]) -> str:
        return json.dumps(
            to_json_compatible(payload), sort_keys=True, indent=self.indent, ensure_ascii=False,
            allow_nan=False,
        ) + "\n"

    def save_json(self, payload: Dict[str, Any], path: Optional[Path] = None) -> str:
        text = self.render_json(payload)
        if path is None:
            sys.stdout.write(text)
            return text
        self._write_text(Path(path), text)
        logger.info(f"Report written to {path}")
        return text

    def save_trace_csv(self, rows: Sequence[Dict[str, Any]], path: Path) -> None:
        frame = pd.DataFrame([to_json_compatible(r) for r in rows], columns=TRACE_CSV_COLUMNS)
        frame['witness'] = frame['witness'].map(
            lambda w: " ".join(str(letter) for letter in w) if isinstance(w, list) else w
        )
        self._write_frame(frame, Path(path))

    def save_samples_csv(self, samples: Sequence[BoundarySample], path: Path) -> None:
        frame = pd.DataFrame([s.to_row() for s in samples], columns=SAMPLE_CSV_COLUMNS)
        self._write_frame(frame, Path(path))

    def _write_frame(self, frame: pd.DataFrame, path: Path) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            frame.to_csv(path, index=False, lineterminator="\n", float_format="%.17g")
        except OSError as e:
            raise DataSourceError(f"Failed to write {path}: {e}")
        logger.info(f"Wrote {len(frame)} rows to {path}")

    @staticmethod
    def _write_text(path: Path, text: str) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open(path, 'w', encoding='utf-8', newline="\n") as handle:
                handle.write(text)
        except OSError as e:
            raise DataSourceError(f"Failed to write {path}: {e}")
