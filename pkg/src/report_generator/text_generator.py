"""
Text Report Generator
Renders verification and benchmark reports with Jinja2 templates
"""

import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from jinja2 import Environment, FileSystemLoader, StrictUndefined
from tabulate import tabulate

logger = logging.getLogger(__name__)

TEMPLATES = {
    'verify': 'verify.txt',
    'bench': 'bench.txt',
}


class TextReportGenerator:
    """Generate plain text reports"""

    def __init__(self, template_dir: Optional[str] = None):
        """
        Initialize text report generator

        Args:
            template_dir: Directory containing Jinja2 templates
        """
        if template_dir is None:
            base_dir = Path(__file__).parent.parent.parent
            template_dir = base_dir / "templates" / "reports"

        self.template_dir = Path(template_dir)

        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            undefined=StrictUndefined,
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )

        self.env.filters['status'] = self._status
        self.env.filters['format_duration'] = self._format_duration
        self.env.filters['table'] = self._table

        logger.debug(f"Text Report Generator initialized with template dir: {template_dir}")

    def render(self, report: Dict[str, Any]) -> str:
        """
        Render a report with the template matching its kind

        Args:
            report: Report dictionary with a 'kind' of 'verify' or 'bench'

        Returns:
            Rendered text

        Raises:
            ValueError: If the report kind has no template
        """
        kind = report.get('kind')
        if kind not in TEMPLATES:
            raise ValueError(f"No text template for report kind {kind!r}")
        template = self.env.get_template(TEMPLATES[kind])
        return template.render(report=report)

    def generate(self, report: Dict[str, Any], output_path: str) -> str:
        """
        Generate text report file

        Args:
            report: Report dictionary
            output_path: Path to save the report

        Returns:
            Path to generated report
        """
        try:
            logger.info(f"Generating text report: {output_path}")
            output_file = Path(output_path)
            output_file.parent.mkdir(parents=True, exist_ok=True)
            output_file.write_text(self.render(report), encoding='utf-8')
            logger.info(f"Text report generated successfully: {output_path}")
            return str(output_file)
        except Exception as e:
            logger.error(f"Failed to generate text report: {e}")
            raise

    @staticmethod
    def _status(passed: bool) -> str:
        return 'PASS' if passed else 'FAIL'

    @staticmethod
    def _format_duration(seconds: Optional[float]) -> str:
        """Format a duration in seconds"""
        if seconds is None:
            return 'N/A'
        if seconds < 1:
            return f"{seconds * 1000:.1f}ms"
        if seconds < 60:
            return f"{seconds:.2f}s"
        minutes, rest = divmod(seconds, 60)
        return f"{int(minutes)}m {rest:.0f}s"

    @staticmethod
    def _table(rows: List[Dict[str, Any]], columns: Sequence[str]) -> str:
        """Render selected columns of a list of dicts as a table"""
        return tabulate(
            [[row.get(c, '') for c in columns] for row in rows],
            headers=list(columns),
            tablefmt='github',
        )
