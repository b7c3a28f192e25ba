"""
JSON Report Generator
Generates structured JSON reports for programmatic consumption
"""

import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict

logger = logging.getLogger(__name__)

REPORT_VERSION = '1.0'
REPORT_FORMAT = 'TUTTE-SPLIT-JSON-REPORT'


class JSONReportGenerator:
    """Generate structured JSON reports for command results"""

    def __init__(self, pretty_print: bool = True, indent: int = 2):
        """
        Initialize JSON report generator

        Args:
            pretty_print: Enable pretty printing with indentation
            indent: Number of spaces for indentation
        """
        self.pretty_print = pretty_print
        self.indent = indent if pretty_print else None

        logger.debug("JSON Report Generator initialized")

    def render(self, report: Dict[str, Any], include_metadata: bool = True) -> str:
        """
        Render a report to a JSON string

        Args:
            report: Report dictionary (verification, benchmark or command result)
            include_metadata: Include generation metadata

        Returns:
            JSON text
        """
        data = self._prepare_report_data(report, include_metadata)
        return json.dumps(data, indent=self.indent, ensure_ascii=False)

    def generate(
        self,
        report: Dict[str, Any],
        output_path: str,
        include_metadata: bool = True
    ) -> str:
        """
        Generate JSON report file

        Args:
            report: Report dictionary
            output_path: Path to save JSON report
            include_metadata: Include generation metadata

        Returns:
            Path to generated report
        """
        try:
            logger.info(f"Generating JSON report: {output_path}")

            output_file = Path(output_path)
            output_file.parent.mkdir(parents=True, exist_ok=True)
            output_file.write_text(self.render(report, include_metadata) + '\n', encoding='utf-8')

            logger.info(f"JSON report generated successfully: {output_path}")
            return str(output_file)

        except Exception as e:
            logger.error(f"Failed to generate JSON report: {e}")
            raise

    def _prepare_report_data(self, report: Dict[str, Any], include_metadata: bool) -> Dict[str, Any]:
        """
        Prepare complete report data

        Args:
            report: Raw report
            include_metadata: Include metadata section

        Returns:
            Complete report data
        """
        data: Dict[str, Any] = {
            'version': REPORT_VERSION,
            'format': REPORT_FORMAT,
        }

        if include_metadata:
            data['metadata'] = {
                'generated_at': datetime.now(timezone.utc).isoformat().replace('+00:00', 'Z'),
                'generator': 'Tutte Split JSON Report Generator',
                'generator_version': '1.0.0',
            }

        data.update(report)
        if 'suites' in report:
            data['statistics'] = self._suite_statistics(report['suites'])
        return data

    @staticmethod
    def _suite_statistics(suites) -> Dict[str, int]:
        """Pass/fail counts over verification suites"""
        passed = sum(1 for s in suites if s.get('passed'))
        return {
            'suites': len(suites),
            'passed': passed,
            'failed': len(suites) - passed,
            'checks': sum(s.get('checks', 0) for s in suites),
        }
