"""
Report Manager
Coordinates report rendering for stdout and optional output files
"""

import logging
from typing import Any, Dict, Optional

from .json_generator import JSONReportGenerator
from .text_generator import TextReportGenerator

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')


class ReportManager:
    """Renders reports in the requested format"""

    def __init__(self, template_dir: Optional[str] = None):
        """
        Initialize Report Manager

        Args:
            template_dir: Directory containing report templates
        """
        self.json_generator = JSONReportGenerator(pretty_print=True)
        self.text_generator = TextReportGenerator(template_dir)

    def render(self, report: Dict[str, Any], fmt: str = 'text') -> str:
        """
        Render a report

        Args:
            report: Report dictionary
            fmt: 'text' or 'json'

        Returns:
            Rendered report

        Raises:
            ValueError: If the format is unknown
        """
        if fmt == 'json':
            return self.json_generator.render(report)
        if fmt == 'text':
            return self.text_generator.render(report)
        raise ValueError(f"Unknown report format '{fmt}'; expected one of: {', '.join(FORMATS)}")

    def emit(self, report: Dict[str, Any], fmt: str = 'text', output_path: Optional[str] = None) -> str:
        """
        Render a report and, when asked, write it to a file as well

        Args:
            report: Report dictionary
            fmt: 'text' or 'json'
            output_path: Optional file to write

        Returns:
            Rendered report for stdout
        """
        rendered = self.render(report, fmt)
        if output_path:
            if fmt == 'json':
                self.json_generator.generate(report, output_path)
            else:
                self.text_generator.generate(report, output_path)
        return rendered
