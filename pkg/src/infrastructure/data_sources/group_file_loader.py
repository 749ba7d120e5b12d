# src/infrastructure/data_sources/group_file_loader.py

import json
import logging
import math
from pathlib import Path
from typing import Any, Dict, List

from src.application.services.surface_builder import punctured_torus, thrice_punctured_sphere
from src.core.entities.marked_group import MarkedGroup
from src.core.entities.word import Word
from src.core.interfaces.data_source import GroupSource
from src.core.value_objects.moebius_map import MoebiusMap
from src.shared.constants import BUILTIN_PREFIX, BUILTIN_TORUS, BUILTIN_TPS, ERROR_MESSAGES
from src.shared.utils.exceptions import DataSourceError, ValidationError
from src.shared.validators import parse_torus_arguments, validate_group_payload

logger = logging.getLogger(__name__)


class GroupFileLoader(GroupSource):
    """
    Loads marked groups from JSON files or builtin pseudo-paths.

    File format: {"rank": int, "generators": [[[a, b], [c, d]], ...],
    "peripherals": [[±i, ...], ...], "label": str}. Matrices are rescaled
    to determinant 1; the group is screened with the Jørgensen test and
    normalized so the first peripheral is z ↦ z + 1.
    """

    def __init__(self):
        self.warnings: List[str] = []
        self.loaded_count = 0

    def get_supported_formats(self) -> List[str]:
        return ['.json', f"{BUILTIN_PREFIX}{BUILTIN_TORUS}:x,y,root", f"{BUILTIN_PREFIX}{BUILTIN_TPS}"]

    def load(self, path: str) -> MarkedGroup:
        if path.startswith(BUILTIN_PREFIX):
            group = self._load_builtin(path[len(BUILTIN_PREFIX):])
        else:
            group = self.load_file(path)
        self.loaded_count += 1
        return group

    def load_file(self, file_path: str) -> MarkedGroup:
        payload = self._read_json(file_path)
        group = self.build_group(payload, default_label=Path(file_path).stem)
        logger.info(f"Loaded group '{group.label}' (rank {group.rank}) from {file_path}")
        return group

    def build_group(self, payload: Any, default_label: str = "") -> MarkedGroup:
        fields = validate_group_payload(payload)
        generators = []
        for index, (a, b, c, d) in enumerate(fields['generators']):
            root = math.sqrt(a * d - b * c)
            if abs(root - 1.0) > 1e-12:
                self.warnings.append(f"generators[{index}] rescaled to determinant 1")
            try:
                generators.append(MoebiusMap(a / root, b / root, c / root, d / root))
            except ValidationError as e:
                raise ValidationError(str(e), field=f"generators[{index}]")

        group = MarkedGroup(
            rank=fields['rank'],
            generators=tuple(generators),
            peripherals=tuple(Word(tuple(w)) for w in fields['peripherals']),
            label=fields['label'] or default_label,
        )
        group.check_jorgensen()
        return group.normalize()

    def _read_json(self, file_path: str) -> Dict[str, Any]:
        path = Path(file_path)
        if not path.exists():
            raise DataSourceError(f"Group file not found: {file_path}")
        try:
            with open(path, 'r', encoding='utf-8') as handle:
                return json.load(handle)
        except json.JSONDecodeError as e:
            raise ValidationError(f"invalid JSON at line {e.lineno}, column {e.colno}: {e.msg}",
                                  field=str(path))
        except OSError as e:
            raise DataSourceError(f"Failed to read group file {file_path}: {e}")

    def _load_builtin(self, name: str) -> MarkedGroup:
        kind, _, arguments = name.partition(":")
        if kind == BUILTIN_TPS and not arguments:
            return thrice_punctured_sphere()
        if kind == BUILTIN_TORUS:
            x, y, root = parse_torus_arguments(arguments)
            return punctured_torus(x, y, root)
        raise ValidationError(f"{ERROR_MESSAGES['UNKNOWN_BUILTIN']}: {name!r}", field="group")
