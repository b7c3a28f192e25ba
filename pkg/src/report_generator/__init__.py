"""
Report Generator Module
Text and JSON rendering of verification and benchmark reports
"""

from .json_generator import JSONReportGenerator
from .text_generator import TextReportGenerator
from .report_manager import FORMATS, ReportManager

__all__ = ['JSONReportGenerator', 'TextReportGenerator', 'ReportManager', 'FORMATS']
