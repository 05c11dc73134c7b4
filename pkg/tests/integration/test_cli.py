"""End-to-end tests of the command-line interface."""

import json

import pytest
from typer.testing import CliRunner

from syndrome_resampler.cli import app
from syndrome_resampler.models import EstimationMethod
from syndrome_resampler.serialization import read_estimate, read_joint

runner = CliRunner()


@pytest.fixture
def batch_file(tmp_path):
    path = tmp_path / "batch.jsonl"
    result = runner.invoke(
        app,
        [
            "simulate",
            "-d",
            "3",
            "--p",
            "0.05",
            "-n",
            "3000",
            "--seed",
            "7",
            "--with-gap",
            "--with-exact-prob",
            "--out",
            str(path),
        ],
    )
    assert result.exit_code == 0, result.output
    return path


def test_version():
    """Test the version command."""
    result = runner.invoke(app, ["version"])

    assert result.exit_code == 0
    assert "syndrome-resampler" in result.output


def test_codegen_and_validate(tmp_path):
    """Test writing a code and validating it from file."""
    code_file = tmp_path / "code.json"

    result = runner.invoke(
        app, ["codegen", "--layout", "unrotated", "-d", "3", "--out", str(code_file)]
    )
    assert result.exit_code == 0, result.output
    assert json.loads(code_file.read_text())["n"] == 13

    result = runner.invoke(app, ["validate", "--code", str(code_file)])
    assert result.exit_code == 0, result.output
    assert "passed" in result.output
    assert "failed" not in result.output


def test_validate_broken_code(tmp_path):
    """Test that a broken code file fails validation with exit code 1."""
    code_file = tmp_path / "code.json"
    runner.invoke(app, ["codegen", "-d", "3", "--out", str(code_file)])
    payload = json.loads(code_file.read_text())
    payload["x_logical"] = [0, 3]
    code_file.write_text(json.dumps(payload))

    result = runner.invoke(app, ["validate", "--code", str(code_file)])

    assert result.exit_code == 1
    assert "failed" in result.output


def test_resample_batch(tmp_path, batch_file):
    """Test empirical and exact-weight resampling of a simulated batch."""
    out = tmp_path / "sr.json"

    result = runner.invoke(
        app, ["resample", "--batch", str(batch_file), "--alpha", "2", "--out", str(out)]
    )
    assert result.exit_code == 0, result.output
    estimate = read_estimate(out)
    assert estimate.method is EstimationMethod.SR_EMPIRICAL
    assert 0.0 < estimate.acceptance <= 1.0
    assert estimate.ci_level == 0.67
    assert estimate.ci_low <= estimate.ci_high

    result = runner.invoke(
        app,
        ["resample", "--batch", str(batch_file), "--alpha", "2.5", "--exact", "--bootstrap", "0"],
    )
    assert result.exit_code == 0, result.output
    assert "sr_exact" in result.output


@pytest.mark.parametrize("method", ["ps", "cgps", "combined"])
def test_postselect_batch(tmp_path, batch_file, method):
    """Test every post-selection method on a simulated batch."""
    out = tmp_path / f"{method}.json"

    result = runner.invoke(
        app,
        ["postselect", "--batch", str(batch_file), "--method", method, "--c", "0.5", "-o", str(out)],
    )

    assert result.exit_code == 0, result.output
    estimate = read_estimate(out)
    assert estimate.method.value == method
    assert estimate.has_ci
    assert estimate.ci_low <= estimate.ci_high


@pytest.mark.parametrize("method", ["mwpm", "mld", "gap"])
def test_decode_single_syndrome(method):
    """Test the JSON output of decoding one syndrome key."""
    result = runner.invoke(
        app, ["decode", "--syndrome", "09", "-d", "3", "--method", method, "--p", "0.05"]
    )

    assert result.exit_code == 0, result.output
    payload = json.loads(result.output)
    assert payload["method"] == method
    assert payload["syndrome"] == "09"
    assert payload["gap"] == 1
    assert min(payload["weights"].values()) == 1
    assert payload["class"] in ("I", "X")
    if method != "mld":
        assert payload["weight"] == 1


def test_decode_methods_agree_at_low_noise():
    """Test that MWPM, MLD and the lighter class coincide on a small syndrome."""
    classes = {
        method: json.loads(
            runner.invoke(
                app, ["decode", "-s", "09", "-d", "3", "--method", method, "--p", "0.001"]
            ).output
        )["class"]
        for method in ("mwpm", "mld", "gap")
    }

    assert len(set(classes.values())) == 1


@pytest.mark.parametrize("key", ["zz", "0901"])
def test_decode_bad_syndrome_reports_error(key):
    """Test that a non-hex or wrong-width key gives the error panel, not a traceback."""
    result = runner.invoke(app, ["decode", "--syndrome", key, "-d", "3"])

    assert result.exit_code == 1
    assert result.exception is None or isinstance(result.exception, SystemExit)
    assert "Error" in result.output


def test_exact_quantities(tmp_path):
    """Test the exact command for RCI, joint tables and failure rates."""
    result = runner.invoke(app, ["exact", "-d", "3", "--p", "0", "--what", "rci"])
    assert result.exit_code == 0, result.output
    assert "I^(1) = 1 bits" in result.output

    joint_file = tmp_path / "joint.json"
    result = runner.invoke(
        app, ["exact", "-d", "3", "--p", "0.1", "--what", "joint", "-o", str(joint_file)]
    )
    assert result.exit_code == 0, result.output
    assert len(read_joint(joint_file).supported) == 16

    result = runner.invoke(
        app, ["exact", "-d", "3", "--p", "0.1", "--what", "failure", "--alpha", "inf"]
    )
    assert result.exit_code == 0, result.output


def test_bounds():
    """Test the sample-bound table."""
    result = runner.invoke(app, ["bounds", "-d", "3", "--p", "0.5", "--alpha", "2"])

    assert result.exit_code == 0, result.output
    assert "512" in result.output


def test_crossing(tmp_path):
    """Test the crossing command on two CSV curves."""
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    a.write_text("p,value\n0.1,0.0\n0.3,2.0\n")
    b.write_text("p,value\n0.1,1.0\n0.3,1.0\n")

    result = runner.invoke(app, ["crossing", "--a", str(a), "--b", str(b)])

    assert result.exit_code == 0, result.output
    assert "crossing at p = 0.2" in result.output


def test_missing_batch_reports_error(tmp_path):
    """Test that library errors exit with code 1 and a message."""
    result = runner.invoke(app, ["resample", "--batch", str(tmp_path / "missing.jsonl")])

    assert result.exit_code == 1
    assert "IngestError" in result.output


def test_ingest_external_records(tmp_path):
    """Test ingesting external shots and re-emitting them as a batch file."""
    source = tmp_path / "shots.jsonl"
    rows = [{"syndrome": "00", "x": 0, "gap": 3, "d": 3}] * 6 + [
        {"syndrome": "05", "x": 1, "gap": 1, "d": 3}
    ]
    source.write_text("".join(json.dumps(r) + "\n" for r in rows))
    out = tmp_path / "batch.jsonl"

    result = runner.invoke(app, ["ingest", str(source), "--c", "0.5", "--out", str(out)])

    assert result.exit_code == 0, result.output
    assert "7 records, 2 distinct syndromes" in result.output
    assert out.exists()


def test_run_config(tmp_path):
    """Test a small experiment run from a YAML config."""
    config = tmp_path / "exp.yaml"
    config.write_text(
        "name: smoke\n"
        "distances: [3]\n"
        "p_grid: [0.05]\n"
        "n_samples: 2000\n"
        "methods: [plain, ps, cgps]\n"
        "confidences: [0.5]\n"
    )

    result = runner.invoke(app, ["run", str(config), "--output-dir", str(tmp_path / "out")])

    assert result.exit_code == 0, result.output
    lines = (tmp_path / "out" / "smoke" / "results.csv").read_text().splitlines()
    assert lines[0] == "d,p,method,alpha,c,p_L,std_error,acceptance,N"
    assert len(lines) == 4
