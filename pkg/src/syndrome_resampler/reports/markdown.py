"""Markdown run report."""

from pathlib import Path

from jinja2 import Environment, FileSystemLoader, TemplateError, select_autoescape

from syndrome_resampler.reports.base import BaseReporter, ReportError


def _fmt(value: object, digits: int = 6) -> str:
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return "" if value is None else str(value)


class MarkdownReporter(BaseReporter):
    """Render an experiment manifest and its result rows as Markdown."""

    template_name = "report.md.jinja2"

    def __init__(self, context: dict):
        super().__init__(context)
        template_dir = Path(__file__).parent / "templates"
        self.env = Environment(
            loader=FileSystemLoader(template_dir),
            autoescape=select_autoescape(default_for_string=False, default=False),
            trim_blocks=True,
            lstrip_blocks=True,
            keep_trailing_newline=True,
        )
        self.env.filters["fmt"] = _fmt

    def render(self) -> str:
        try:
            return self.env.get_template(self.template_name).render(**self.context)
        except TemplateError as e:
            raise ReportError(f"Failed to render report: {e}") from e
