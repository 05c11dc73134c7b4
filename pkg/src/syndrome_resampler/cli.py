"""Command-line interface for syndrome-resampler."""

import json
from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from syndrome_resampler.config import (
    default_log_level,
    default_workers,
    load_environment,
    load_experiment_config,
)
from syndrome_resampler.errors import ResamplerError
from syndrome_resampler.log import configure_logging
from syndrome_resampler.models import (
    CgpsConfig,
    CodeSpec,
    DecoderConfig,
    DecoderMethod,
    Estimate,
    Layout,
    MatchingBackend,
    NoiseModel,
)

app = typer.Typer(
    name="sresample",
    help="Syndrome resampling, post-selection and threshold estimation for surface codes",
    add_completion=False,
)
console = Console()


@app.callback()
def main(
    log_level: str = typer.Option(  # noqa: B008
        None, "--log-level", help="Log level (default from SRESAMPLE_LOG_LEVEL or WARNING)"
    ),
):
    """Load ``.env`` and set up logging before any command runs."""
    load_environment()
    configure_logging(log_level or default_log_level())


@contextmanager
def _reported_errors() -> Iterator[None]:
    try:
        yield
    except ResamplerError as e:
        console.print(Panel.fit(f"[red]{e}[/red]", title=type(e).__name__, border_style="red"))
        raise typer.Exit(code=1) from e


def _code(code_file: Path | None, layout: Layout, distance: int | None) -> CodeSpec:
    from syndrome_resampler.codes import build_code
    from syndrome_resampler.serialization import load_code

    if code_file is not None:
        return load_code(code_file)
    if distance is None:
        raise typer.BadParameter("pass --code FILE or --distance D")
    return build_code(layout, distance)


def _print_estimate(estimate: Estimate) -> None:
    table = Table(title=f"Estimate ({estimate.method.value})")
    table.add_column("field")
    table.add_column("value", justify="right")
    table.add_row("p_L", f"{estimate.value:.6g}")
    table.add_row("std error", f"{estimate.std_error:.3g}")
    if estimate.has_ci:
        table.add_row(
            f"{estimate.ci_level:.0%} interval",
            f"[{estimate.ci_low:.6g}, {estimate.ci_high:.6g}]",
        )
    if estimate.alpha is not None:
        table.add_row("alpha", f"{estimate.alpha:g}")
    table.add_row("acceptance", f"{estimate.acceptance:.4f}")
    table.add_row("effective samples", f"{estimate.effective_samples:.6g}")
    table.add_row("N", str(estimate.n_samples))
    console.print(table)


def _emit(model, out: Path | None) -> None:
    from syndrome_resampler.serialization import write_model

    if out is not None:
        write_model(model, out)
        console.print(f"Wrote [cyan]{out}[/cyan]")


def _with_interval(batch, estimator, n_bootstrap: int, level: float, seed: int) -> Estimate:
    """Point estimate from ``seed``, plus a bootstrap interval when ``n_bootstrap`` > 0."""
    import numpy as np

    from syndrome_resampler.analysis import DegenerateInputError, bootstrap_estimate

    point = estimator(batch, np.random.Generator(np.random.Philox(seed)))
    if n_bootstrap <= 0:
        return point
    try:
        return bootstrap_estimate(batch, estimator, n_bootstrap, level, seed=seed, point=point)
    except DegenerateInputError as e:
        console.print(f"[yellow]No bootstrap interval: {e}[/yellow]")
        return point


@app.command()
def version():
    """Show version information."""
    from syndrome_resampler import __author__, __version__

    console.print(f"[bold green]syndrome-resampler[/bold green] v{__version__}")
    console.print(f"Author: {__author__}")


@app.command()
def codegen(
    layout: Layout = typer.Option(Layout.ROTATED, "--layout", help="Lattice layout"),  # noqa: B008
    distance: int = typer.Option(..., "--distance", "-d", help="Code distance (>= 2)"),  # noqa: B008
    out: Path = typer.Option(..., "--out", "-o", help="Output JSON file"),  # noqa: B008
):
    """Build a surface code and write it as JSON."""
    from syndrome_resampler.codes import build_code
    from syndrome_resampler.serialization import write_code

    with _reported_errors():
        code = build_code(layout, distance)
        write_code(code, out)
    console.print(
        f"✅ {code.code_id}: n={code.n}, {code.num_checks} Z checks, "
        f"{len(code.x_checks)} X checks -> [cyan]{out}[/cyan]"
    )


@app.command()
def validate(
    code_file: Path = typer.Option(None, "--code", help="Code JSON from codegen"),  # noqa: B008
    layout: Layout = typer.Option(Layout.ROTATED, "--layout"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d"),  # noqa: B008
):
    """Check every code invariant and print the report."""
    from syndrome_resampler.validators import validate_code

    with _reported_errors():
        code = _code(code_file, layout, distance)
        report = validate_code(code)
    table = Table(title=f"Validation of {code.code_id}")
    table.add_column("check")
    table.add_column("status")
    table.add_column("detail")
    colours = {"passed": "green", "failed": "red", "skipped": "yellow"}
    for check in report.checks:
        colour = colours.get(check.status.value, "white")
        table.add_row(check.name, f"[{colour}]{check.status.value}[/{colour}]", check.detail or "")
    console.print(table)
    if not report.ok:
        raise typer.Exit(code=1)


@app.command()
def simulate(
    code_file: Path = typer.Option(None, "--code", help="Code JSON from codegen"),  # noqa: B008
    layout: Layout = typer.Option(Layout.ROTATED, "--layout"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d"),  # noqa: B008
    p: float = typer.Option(..., "--p", help="Bit-flip probability"),  # noqa: B008
    n_samples: int = typer.Option(..., "--n-samples", "-n"),  # noqa: B008
    seed: int = typer.Option(0, "--seed"),  # noqa: B008
    decoder: DecoderMethod = typer.Option(DecoderMethod.MWPM, "--decoder"),  # noqa: B008
    backend: MatchingBackend = typer.Option(MatchingBackend.PYMATCHING, "--backend"),  # noqa: B008
    with_gap: bool = typer.Option(False, "--with-gap", help="Record complementary gaps"),  # noqa: B008
    with_exact_prob: bool = typer.Option(  # noqa: B008
        False, "--with-exact-prob", help="Record exact P(s) per record"
    ),
    workers: int = typer.Option(None, "--workers", "-w"),  # noqa: B008
    out: Path = typer.Option(..., "--out", "-o", help="Output batch file (JSONL)"),  # noqa: B008
):
    """Sample and decode a seeded Monte Carlo batch."""
    from syndrome_resampler.noise import run_batch
    from syndrome_resampler.serialization import write_batch

    with _reported_errors():
        code = _code(code_file, layout, distance)
        cfg = DecoderConfig(
            method=decoder, backend=backend, with_gap=with_gap, with_exact_prob=with_exact_prob
        )
        batch = run_batch(
            code, NoiseModel(p=p), n_samples, cfg, seed, workers or default_workers()
        )
        write_batch(batch, out)
    console.print(
        f"✅ {batch.n} records, {len(batch.keys)} distinct syndromes, "
        f"failure rate {batch.failures.mean():.6g} -> [cyan]{out}[/cyan]"
    )


class DecodeMethod(str, Enum):
    MWPM = "mwpm"
    MLD = "mld"
    GAP = "gap"


@app.command()
def decode(
    syndrome: str = typer.Option(..., "--syndrome", "-s", help="Syndrome key (hex)"),  # noqa: B008
    code_file: Path = typer.Option(None, "--code"),  # noqa: B008
    layout: Layout = typer.Option(Layout.ROTATED, "--layout"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d"),  # noqa: B008
    method: DecodeMethod = typer.Option(DecodeMethod.MWPM, "--method"),  # noqa: B008
    p: float = typer.Option(0.1, "--p", help="Noise strength for MLD"),  # noqa: B008
):
    """Decode one syndrome and print its class, weights and complementary gap as JSON."""
    from syndrome_resampler.codes import DetectionGraph
    from syndrome_resampler.decoders import class_min_weights, decode_mld, decode_mwpm
    from syndrome_resampler.noise import decode_syndrome, encode_syndrome

    with _reported_errors():
        code = _code(code_file, layout, distance)
        bits = decode_syndrome(syndrome, code.num_checks)
        w_i, w_x = (int(w) for w in class_min_weights(code, bits)[0])
        payload = {
            "code_id": code.code_id,
            "syndrome": encode_syndrome(bits),
            "method": method.value,
            "weights": {"I": w_i, "X": w_x},
            "gap": abs(w_x - w_i),
        }
        if method is DecodeMethod.MWPM:
            result = decode_mwpm(DetectionGraph(code), code, bits)
            payload.update({"class": result.logical_class.value, "weight": result.weight})
        elif method is DecodeMethod.MLD:
            payload.update({"class": decode_mld(code, NoiseModel(p=p), bits).value, "p": p})
        else:
            payload.update({"class": "X" if w_x < w_i else "I", "weight": min(w_i, w_x)})
    typer.echo(json.dumps(payload, indent=2))


@app.command()
def exact(
    code_file: Path = typer.Option(None, "--code"),  # noqa: B008
    layout: Layout = typer.Option(Layout.ROTATED, "--layout"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d"),  # noqa: B008
    p: float = typer.Option(..., "--p"),  # noqa: B008
    alpha: float = typer.Option(1.0, "--alpha", help="Power; 'inf' for post-selection"),  # noqa: B008
    what: str = typer.Option(  # noqa: B008
        "rci", "--what", help="joint | powerdist | rci | failure | entropy"
    ),
    decoder: DecoderMethod = typer.Option(DecoderMethod.MWPM, "--decoder"),  # noqa: B008
    raw: bool = typer.Option(False, "--raw", help="RCI without the +k shift"),  # noqa: B008
    samples: int = typer.Option(  # noqa: B008
        None, "--samples", help="Estimate the RCI from this many sampled syndromes"
    ),
    seed: int = typer.Option(0, "--seed"),  # noqa: B008
    out: Path = typer.Option(None, "--out", "-o"),  # noqa: B008
):
    """Exact distributions and derived quantities."""
    from syndrome_resampler.exact import (
        decoder_class_bits,
        exact_resampled_failure,
        joint_distribution,
        power_distribution,
        rci,
        rci_sampled,
        renyi_entropy,
    )
    from syndrome_resampler.models import index_to_key
    from syndrome_resampler.serialization import format_probability, write_joint

    with _reported_errors():
        code = _code(code_file, layout, distance)
        noise = NoiseModel(p=p)
        if what == "rci" and samples is not None:
            value = rci_sampled(code, noise, alpha, samples, seed, raw=raw)
            console.print(f"I^({alpha:g}) = {value.value:.10g} +/- {value.std_error:.2g} bits")
            _emit(value, out)
            return
        joint = joint_distribution(code, noise)
        if what == "joint":
            console.print(
                f"{len(joint.supported)} supported syndromes, total mass {joint.total_mass:.15g}"
            )
            if out is not None:
                write_joint(joint, out)
                console.print(f"Wrote [cyan]{out}[/cyan]")
        elif what == "powerdist":
            dist = power_distribution(joint, alpha)
            console.print(f"log2 Z_alpha = {dist.log2_normalizer:.10g}")
            if out is not None:
                rows = {
                    index_to_key(int(i), code.key_bytes): format_probability(q)
                    for i, q in enumerate(dist.probabilities)
                    if q > 0
                }
                out.write_text(json.dumps({"alpha": alpha, "q": rows}, indent=2) + "\n")
        elif what == "rci":
            value = rci(joint, alpha, raw=raw)
            console.print(f"I^({alpha:g}) = {value.value:.12g} bits")
            _emit(value, out)
        elif what == "failure":
            class_map = decoder_class_bits(code, noise, decoder)
            failure = exact_resampled_failure(joint, alpha, class_map)
            console.print(f"p_L^({alpha:g}) [{decoder.value}] = {failure:.12g}")
            if out is not None:
                out.write_text(
                    json.dumps(
                        {"alpha": alpha, "decoder": decoder.value, "p_L": format_probability(failure)}
                    )
                    + "\n"
                )
        elif what == "entropy":
            console.print(f"H_{alpha:g}(P) = {renyi_entropy(joint, alpha):.12g} bits")
        else:
            raise typer.BadParameter(f"unknown --what '{what}'")


@app.command()
def resample(
    batch_file: Path = typer.Option(..., "--batch", help="Batch file (JSONL)"),  # noqa: B008
    alpha: float = typer.Option(2.0, "--alpha"),  # noqa: B008
    n_tilde: int = typer.Option(None, "--n-tilde", help="Draws (default: kept count)"),  # noqa: B008
    seed: int = typer.Option(0, "--seed"),  # noqa: B008
    use_exact: bool = typer.Option(  # noqa: B008
        False, "--exact", help="Weight by recorded exact P(s) instead of resampling"
    ),
    n_bootstrap: int = typer.Option(  # noqa: B008
        200, "--bootstrap", help="Bootstrap replicates for the interval (0 for none)"
    ),
    level: float = typer.Option(0.67, "--level", help="Bootstrap interval level"),  # noqa: B008
    out: Path = typer.Option(None, "--out", "-o"),  # noqa: B008
):
    """Syndrome-resampled logical error rate of a batch."""
    from syndrome_resampler.ingest import ingest_records
    from syndrome_resampler.resampling import resample_workflow, sr_estimate_batch

    with _reported_errors():
        batch = ingest_records(batch_file)
        if use_exact:

            def estimator(b, _):
                return sr_estimate_batch(b, alpha)

        else:
            if alpha != int(alpha):
                raise typer.BadParameter("finite-data resampling needs an integer --alpha")

            def estimator(b, rng):
                return resample_workflow(b, int(alpha), n_tilde, rng=rng)[0]

        estimate = _with_interval(batch, estimator, n_bootstrap, level, seed)
    _print_estimate(estimate)
    _emit(estimate, out)


@app.command()
def bounds(
    code_file: Path = typer.Option(None, "--code"),  # noqa: B008
    layout: Layout = typer.Option(Layout.ROTATED, "--layout"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d"),  # noqa: B008
    p: float = typer.Option(..., "--p"),  # noqa: B008
    alpha: int = typer.Option(2, "--alpha"),  # noqa: B008
):
    """Sample-size lower bounds for a resampling power."""
    from syndrome_resampler.resampling import sample_bounds

    with _reported_errors():
        result = sample_bounds(alpha, _code(code_file, layout, distance), NoiseModel(p=p))
    table = Table(title=f"Sample bounds (alpha={alpha})")
    table.add_column("bound")
    table.add_column("N", justify="right")
    table.add_row("P_max", f"{result.p_max:.6g}")
    table.add_row("generic", f"{result.generic:.6g}")
    table.add_row("low p", f"{result.low_p:.6g}")
    table.add_row("high p", f"{result.high_p:.6g}")
    console.print(table)


@app.command()
def postselect(
    batch_file: Path = typer.Option(..., "--batch"),  # noqa: B008
    method: str = typer.Option("ps", "--method", help="ps | cgps | combined"),  # noqa: B008
    alpha: int = typer.Option(2, "--alpha"),  # noqa: B008
    c: float = typer.Option(1.0, "--c", help="CGPS confidence in [0, 1]"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d", help="Defaults to the batch's"),  # noqa: B008
    n_tilde: int = typer.Option(None, "--n-tilde"),  # noqa: B008
    seed: int = typer.Option(0, "--seed"),  # noqa: B008
    n_bootstrap: int = typer.Option(  # noqa: B008
        200, "--bootstrap", help="Bootstrap replicates for the interval (0 for none)"
    ),
    level: float = typer.Option(0.67, "--level", help="Bootstrap interval level"),  # noqa: B008
    out: Path = typer.Option(None, "--out", "-o"),  # noqa: B008
):
    """Post-selected logical error rate of a batch."""
    from syndrome_resampler.ingest import ingest_records
    from syndrome_resampler.postselect import cgps_filter, combined_sr_cgps, ps_estimate

    with _reported_errors():
        batch = ingest_records(batch_file)
        if method == "ps":

            def estimator(b, _):
                return ps_estimate(b)

        else:
            d = distance or batch.distance
            if d is None:
                raise typer.BadParameter("batch has no distance; pass --distance")
            cfg = CgpsConfig(confidence=c, distance=d)
            if method == "cgps":

                def estimator(b, _):
                    return cgps_filter(b, cfg)[1]

            elif method == "combined":

                def estimator(b, rng):
                    return combined_sr_cgps(b, alpha, cfg, n_tilde, rng=rng)

            else:
                raise typer.BadParameter(f"unknown --method '{method}'")
        estimate = _with_interval(batch, estimator, n_bootstrap, level, seed)
    _print_estimate(estimate)
    _emit(estimate, out)


@app.command()
def collapse(
    points_file: Path = typer.Option(..., "--in", help="CSV with p, d, p_L, sigma"),  # noqa: B008
    p_th0: float = typer.Option(0.1, "--p-th0"),  # noqa: B008
    nu0: float = typer.Option(1.5, "--nu0"),  # noqa: B008
    seed: int = typer.Option(0, "--seed"),  # noqa: B008
    workers: int = typer.Option(None, "--workers", "-w"),  # noqa: B008
    out: Path = typer.Option(None, "--out", "-o"),  # noqa: B008
):
    """Finite-size scaling collapse for the threshold and exponent."""
    from syndrome_resampler.analysis import scaling_collapse
    from syndrome_resampler.serialization import read_scaling_points

    with _reported_errors():
        fit = scaling_collapse(
            read_scaling_points(points_file),
            init=(p_th0, nu0),
            seed=seed,
            workers=workers or default_workers(),
        )
    console.print(f"p_th = {fit.p_th:.5f} +/- {fit.p_th_error:.5f}")
    console.print(f"nu   = {fit.nu:.4f} +/- {fit.nu_error:.4f}")
    console.print(f"chi2/dof = {fit.residual:.4g} over {fit.n_points} points")
    _emit(fit, out)


@app.command()
def crossing(
    curve_a: Path = typer.Option(..., "--a", help="CSV with p and one value column"),  # noqa: B008
    curve_b: Path = typer.Option(..., "--b"),  # noqa: B008
):
    """Crossing point of two curves on a shared p grid."""
    from syndrome_resampler.analysis import crossing_point
    from syndrome_resampler.serialization import read_curve

    with _reported_errors():
        p = crossing_point(read_curve(curve_a), read_curve(curve_b))
    console.print(f"crossing at p = {p:.6g}")


@app.command()
def ingest(
    source: str = typer.Argument(..., help="Records file or http(s) URL"),  # noqa: B008
    alpha: int = typer.Option(2, "--alpha"),  # noqa: B008
    c: float = typer.Option(None, "--c", help="Also report CGPS at this confidence"),  # noqa: B008
    distance: int = typer.Option(None, "--distance", "-d"),  # noqa: B008
    seed: int = typer.Option(0, "--seed"),  # noqa: B008
    out: Path = typer.Option(None, "--out", "-o", help="Write the batch as JSONL"),  # noqa: B008
):
    """Ingest recorded shots and report plain, PS, SR and CGPS estimates."""
    from syndrome_resampler.ingest import ingest_records
    from syndrome_resampler.postselect import cgps_filter, ps_estimate
    from syndrome_resampler.resampling import (
        EmptyAfterDiscardError,
        acceptance_rate,
        plain_estimate,
        resample_workflow,
    )
    from syndrome_resampler.serialization import write_batch

    with _reported_errors():
        batch = ingest_records(source)
        console.print(f"{batch.n} records, {len(batch.keys)} distinct syndromes")
        console.print(f"acceptance at alpha={alpha}: {acceptance_rate(batch, alpha):.4f}")
        estimators = [
            ("plain", lambda: plain_estimate(batch)),
            ("ps", lambda: ps_estimate(batch)),
            ("sr", lambda: resample_workflow(batch, alpha, seed=seed)[0]),
        ]
        d = distance or batch.distance
        if c is not None and d is not None:
            cfg = CgpsConfig(confidence=c, distance=d)
            estimators.append(("cgps", lambda: cgps_filter(batch, cfg)[1]))
        table = Table(title="Estimates")
        for column in ("method", "p_L", "std error", "acceptance", "<X> = 1 - 2 p_L"):
            table.add_column(column, justify="right")
        for name, fn in estimators:
            try:
                est = fn()
            except EmptyAfterDiscardError as e:
                table.add_row(name, "-", "-", "0", f"[dim]{e}[/dim]")
                continue
            table.add_row(
                name,
                f"{est.value:.6g}",
                f"{est.std_error:.3g}",
                f"{est.acceptance:.4f}",
                f"{est.expectation:.6g} +/- {est.expectation_error:.2g}",
            )
        console.print(table)
        if out is not None:
            write_batch(batch, out)
            console.print(f"Wrote [cyan]{out}[/cyan]")


@app.command()
def run(
    config_file: Path = typer.Argument(..., help="Experiment config (YAML)"),  # noqa: B008
    workers: int = typer.Option(None, "--workers", "-w"),  # noqa: B008
    output_dir: Path = typer.Option(None, "--output-dir", "-o"),  # noqa: B008
):
    """Run a full experiment grid from a config file."""
    from syndrome_resampler.experiment import run_experiment

    with _reported_errors():
        config = load_experiment_config(config_file)
        console.print(f"\n[bold cyan]{config.name}[/bold cyan]")
        outputs = run_experiment(config, workers=workers, output_dir=output_dir)
    console.print(f"✅ {len(outputs.rows)} rows -> [cyan]{outputs.csv}[/cyan]")
    if outputs.skipped:
        console.print(f"[yellow]{len(outputs.skipped)} points skipped, see {outputs.report}[/yellow]")
    console.print(f"Manifest: {outputs.manifest}")
    console.print(f"Report:   {outputs.report}")


if __name__ == "__main__":
    app()
