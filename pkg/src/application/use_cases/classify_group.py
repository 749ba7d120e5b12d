# src/application/use_cases/classify_group.py

import logging
from typing import Any, Dict, Optional

from src.core.entities.marked_group import MarkedGroup
from src.core.interfaces.data_source import GroupSource
from src.infrastructure.data_sources.group_file_loader import GroupFileLoader

logger = logging.getLogger(__name__)


class ClassifyGroupUseCase:
    """Classification table for the generators and peripherals of one group."""

    def __init__(self, source: Optional[GroupSource] = None):
        self.source = source or GroupFileLoader()

    def execute(self, path: str) -> Dict[str, Any]:
        group = self.source.load(path)
        report = self.classify(group)
        logger.info(f"Classified {group.rank} generators and "
                    f"{len(group.peripherals)} peripherals of '{group.label}'")
        return report

    @staticmethod
    def classify(group: MarkedGroup) -> Dict[str, Any]:
        generators = []
        for index, generator in enumerate(group.generators, start=1):
            entry = {'index': index, 'matrix': generator.to_list()}
            entry.update(generator.classify().to_dict())
            generators.append(entry)

        peripherals = []
        for index, word in enumerate(group.peripherals):
            entry = {'index': index, 'word': word.to_list()}
            entry.update(group.evaluate(word).classify().to_dict())
            peripherals.append(entry)

        return {
            'label': group.label,
            'rank': group.rank,
            'normalized': group.is_normalized(),
            'generators': generators,
            'peripherals': peripherals,
            'jorgensen': [
                {'pair': list(pair), 'value': value} for pair, value in group.jorgensen_values()
            ],
        }
