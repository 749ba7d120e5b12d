# tests/unit/infrastructure/test_report_repository.py

import json
import math

import numpy as np

from src.core.entities.boundary import BoundarySample
from src.core.entities.word import Word
from src.core.value_objects.extended_real import INFINITY, ExtendedReal
from src.infrastructure.repositories.report_repository import (
    JsonCsvReportRepository,
    to_json_compatible,
)
from src.shared.constants import IsometryKind


class TestJsonConversion:
    """Plain JSON values for report payloads."""

    def test_special_values(self):
        payload = {
            'point': INFINITY,
            'word': Word.of(1, -2),
            'kind': IsometryKind.PARABOLIC,
            'big': math.inf,
            'missing': math.nan,
            'count': np.int64(3),
            'flag': np.bool_(True),
        }
        assert to_json_compatible(payload) == {
            'point': "inf",
            'word': [1, -2],
            'kind': "parabolic",
            'big': "inf",
            'missing': None,
            'count': 3,
            'flag': True,
        }


class TestJsonCsvReportRepository:
    """Report files on disk."""

    def setup_method(self):
        self.repository = JsonCsvReportRepository()

    def test_keys_sorted(self):
        text = self.repository.render_json({'b': 1, 'a': {'d': 2, 'c': 3}})
        assert text.index('"a"') < text.index('"b"')
        assert text.index('"c"') < text.index('"d"')
        assert text.endswith("\n")

    def test_save_json(self, tmp_path):
        path = tmp_path / "out" / "report.json"
        self.repository.save_json({'value': INFINITY}, path)
        assert json.loads(path.read_text()) == {'value': "inf"}

    def test_trace_csv(self, tmp_path):
        path = tmp_path / "trace.csv"
        rows = [
            {'estimate': 'delta_forward', 'cutoff': 1, 'value': 1.5, 'witness': [1, 2]},
            {'estimate': 'gap', 'cutoff': 1, 'value': 0.0, 'witness': None},
        ]
        self.repository.save_trace_csv(rows, path)
        raw = path.read_bytes()
        assert b"\r\n" not in raw
        lines = raw.decode().splitlines()
        assert lines[0] == "estimate,cutoff,value,witness"
        assert lines[1] == "delta_forward,1,1.5,1 2"

    def test_samples_csv(self, tmp_path):
        path = tmp_path / "samples.csv"
        samples = [BoundarySample(Word.of(1), ExtendedReal(0.25), ExtendedReal(0.5)),
                   BoundarySample(Word.of(2), INFINITY, INFINITY)]
        self.repository.save_samples_csv(samples, path)
        lines = path.read_text().splitlines()
        assert lines[0] == "word,x,y,kind"
        assert lines[2].split(",")[1:3] == ["inf", "inf"]
        assert len(lines) == 3
