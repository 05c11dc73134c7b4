"""Tests for the Markdown run report."""

from syndrome_resampler.reports import MarkdownReporter

MANIFEST = {
    "name": "smoke",
    "version": "0.1.0",
    "layout": "rotated",
    "decoder": "mwpm",
    "backend": "pymatching",
    "seed": 0,
    "n_samples": 100,
    "distances": [3],
    "p_grid": [0.1],
    "methods": ["plain", "cgps"],
    "alphas": [2.0],
    "confidences": [0.0],
    "ci_level": 0.67,
}


def test_render_rows():
    """Test that every result row becomes a table line."""
    rows = [
        {
            "d": 3,
            "p": 0.1,
            "method": "plain",
            "alpha": None,
            "c": None,
            "p_L": 0.0123,
            "std_error": 0.001,
            "ci_low": 0.011,
            "ci_high": 0.0135,
            "acceptance": 1.0,
            "N": 100,
        }
    ]

    text = MarkdownReporter({"manifest": MANIFEST, "rows": rows, "skipped": []}).render()

    assert text.startswith("# smoke")
    assert "| 3 | 0.1 | plain |  |  | 0.0123 | 0.001 | [0.011, 0.0135] | 1 | 100 |" in text
    assert "| 0.67 CI |" in text
    assert "Skipped points" not in text


def test_render_skipped(tmp_path):
    """Test that skipped points are listed with their reason."""
    skipped = [
        {"d": 3, "p": 0.1, "method": "cgps", "alpha": None, "c": 0.0, "reason": "nothing kept"}
    ]

    path = MarkdownReporter({"manifest": MANIFEST, "rows": [], "skipped": skipped}).write(
        tmp_path / "report.md"
    )

    text = path.read_text()
    assert "## Skipped points" in text
    assert "cgps" in text and "nothing kept" in text
