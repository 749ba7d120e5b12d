# src/application/use_cases/generate_report.py

import logging
from datetime import datetime
from typing import Any, Dict

from src.application.run_config import RunConfig
from src.shared.constants import PACKAGE_VERSION, SCHEMA_VERSION

logger = logging.getLogger(__name__)


class GenerateReportUseCase:
    """Wrap a command result in the versioned report envelope."""

    def execute(self, config: RunConfig, body: Dict[str, Any],
                include_meta: bool = True) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            'schema': SCHEMA_VERSION,
            'config': config.to_dict(),
            'result': body,
        }
        if include_meta:
            report['meta'] = {
                'generated_at': datetime.now().isoformat(timespec='seconds'),
                'version': PACKAGE_VERSION,
            }
        logger.debug(f"Assembled {config.command.value} report")
        return report
