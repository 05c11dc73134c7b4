"""Run reports."""

from .base import BaseReporter, ReportError
from .markdown import MarkdownReporter

__all__ = ["BaseReporter", "ReportError", "MarkdownReporter"]
