"""
Reports: command results rendered as human tables or JSON
"""

from .report import FORMATS, Report, ReportWriter, emit

__all__ = ["FORMATS", "Report", "ReportWriter", "emit"]
