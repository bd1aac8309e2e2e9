"""mdimate CLI - invariant checks, fake-detection demos, threshold queries and scans"""

import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional

import typer
from loguru import logger
from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from mdimate import __version__
from mdimate.domain.value_objects import IndexSet, PerpConvention, ScanKind, SumConvention, ThresholdMethod
from mdimate.exceptions import MdiMateError, ScanConfigError
from mdimate.models.decomposition import DecompositionDocument
from mdimate.models.noise import noise_spec_adapter, parse_noise_spec
from mdimate.models.scan import ScanConfig, ScanResult
from mdimate.models.threshold import MemoryConventionRow, ThresholdComparison, ThresholdResult
from mdimate.models.verification import VerificationReport
from mdimate.services import FakeDetectionService, ScanService, ThresholdService, VerificationService
from mdimate.utils.file_utils import read_json, write_text
from mdimate.utils.settings import settings_factory

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

app = typer.Typer(
    name="mdimate",
    help="Measurement-device-independent entanglement witnesses under noisy quantum inputs",
    add_completion=False,
    no_args_is_help=True,
)
console = Console()


@dataclass
class CliState:
    """Global options shared by every command"""
    seed: int | None
    out: Path | None
    config: Path | None


def _state(ctx: typer.Context) -> CliState:
    return ctx.obj if isinstance(ctx.obj, CliState) else CliState(None, None, None)


def _fail(message: str, code: int) -> typer.Exit:
    console.print(f"[red]Error: {message}[/red]")
    return typer.Exit(code)


def _format_v(value: float) -> str:
    return "∞" if math.isinf(value) else f"{value:.12g}"


def _parse_axis(text: str) -> dict[str, Any]:
    """``name:min:max:steps`` into a ScanAxis document."""
    parts = text.split(":")
    if len(parts) != 4:
        raise typer.BadParameter(f"expected name:min:max:steps, got {text!r}")
    name, low, high, steps = parts
    try:
        return {"name": name, "min": float(low), "max": float(high), "steps": int(steps)}
    except ValueError as e:
        raise typer.BadParameter(f"{text!r}: {e}") from e


def _parse_pairs(items: list[str], option: str) -> dict[str, float]:
    """Repeated ``key=value`` options into a mapping."""
    pairs = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise typer.BadParameter(f"{option} expects key=value, got {item!r}")
        try:
            pairs[key.strip()] = float(value)
        except ValueError as e:
            raise typer.BadParameter(f"{option} {key}: {value!r} is not a number") from e
    return pairs


@app.callback()
def main_callback(
    ctx: typer.Context,
    seed: Optional[int] = typer.Option(None, "--seed", help="Base seed for random trials"),
    out: Optional[Path] = typer.Option(None, "--out", help="Where to write the command's result"),
    config: Optional[Path] = typer.Option(None, "--config", help="Scan configuration JSON"),
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="loguru level for stderr (default from MDI_APP_LOG_LEVEL)"
    ),
) -> None:
    """
    Noisy-input MDI entanglement witness toolkit
    """
    level = (log_level or settings_factory.create_app_settings().log_level).upper()
    logger.remove()
    try:
        logger.add(sys.stderr, level=level)
    except ValueError:
        logger.add(sys.stderr, level="WARNING")
        logger.warning(f"Unknown log level {level!r}, using WARNING")
    ctx.obj = CliState(seed=seed, out=out, config=config)


# ---------------------------------------------------------------- verify


def display_verification(report: VerificationReport) -> None:
    table = Table(title=f"Invariant suites (seed={report.seed})", box=box.SIMPLE)
    table.add_column("invariant", style="cyan")
    table.add_column("status")
    table.add_column("max deviation", justify="right")
    table.add_column("tolerance", justify="right")
    table.add_column("samples", justify="right")
    for inv in report.invariants:
        status = "[green]pass[/green]" if inv.passed else "[red]FAIL[/red]"
        table.add_row(inv.name, status, f"{inv.max_deviation:.3e}", f"{inv.tolerance:.0e}", str(inv.samples))
    console.print(table)


@app.command()
def verify(
    ctx: typer.Context,
    inject_beta_fault: bool = typer.Option(
        False, "--inject-beta-fault", help="Perturb β[0, 0] to check that the suites catch it"
    ),
    decomposition: Optional[Path] = typer.Option(
        None, "--decomposition", help="Decomposition JSON to verify instead of the Werner one"
    ),
) -> None:
    """
    Run every invariant suite; exit 1 naming the failing invariants
    """
    state = _state(ctx)
    decomp = None
    if decomposition is not None:
        try:
            decomp = DecompositionDocument.load_json(decomposition).to_decomposition()
        except (OSError, ValueError, ValidationError, MdiMateError) as e:
            raise _fail(f"cannot load decomposition {decomposition}: {e}", EXIT_USAGE)

    service = VerificationService.create_default()
    with console.status("[cyan]Running invariant suites...[/cyan]"):
        result = service.run(seed=state.seed, decomposition=decomp, inject_beta_fault=inject_beta_fault)

    report = result.unwrap() if result.is_ok() else result.unwrap_err()
    display_verification(report)
    if state.out is not None:
        write_text(state.out, report.model_dump_json(indent=2))

    if result.is_err():
        console.print(f"[red]Failed invariants: {', '.join(report.failing())}[/red]")
        raise typer.Exit(EXIT_FAILED)
    console.print("[green]✓ All invariants hold[/green]")


# ---------------------------------------------------------------- fake-detect


def _fail_fake_detection(error: dict[str, Any]) -> typer.Exit:
    return _fail(error["error"], EXIT_USAGE if error["kind"] == "config" else EXIT_FAILED)


@app.command("fake-detect")
def fake_detect(
    ctx: typer.Context,
    example: int = typer.Option(..., "--example", min=1, max=2, help="1: non-uniform admixture, 2: entangling map"),
    q: list[float] = typer.Option([1.0], "--q", help="Noise weight(s) for example 1"),
    p: Optional[list[float]] = typer.Option(None, "--p", help="Weight(s) of |ψ_s⟩|ψ_t⟩ for example 2"),
    convention: PerpConvention = typer.Option(PerpConvention.PLUS, "--convention", help="Phase of |ψ⊥⟩"),
    polar: int = typer.Option(50, "--polar", min=2, help="Polar grid points for θ"),
    azimuthal: int = typer.Option(100, "--azimuthal", min=1, help="Azimuthal grid points for θ"),
    verify_all: bool = typer.Option(False, "--verify-all", help="Evaluate every grid point through the full game"),
) -> None:
    """
    Show the witness firing on a product shared state under corrupted inputs
    """
    state = _state(ctx)
    service = FakeDetectionService(polar_steps=polar, azimuth_steps=azimuthal)

    if example == 1:
        with console.status("[cyan]Searching the θ grid...[/cyan]"):
            result = service.non_uniform_admixture(q, verify_all=verify_all)
        if result.is_err():
            raise _fail_fake_detection(result.unwrap_err())
        findings = result.unwrap()
        table = Table(title="Non-uniform admixture toward |θ⟩", box=box.SIMPLE)
        for column in ("q", "minimum", "−q²/8", "θ (Bloch)", "detected"):
            table.add_column(column, justify="right")
        for f in findings:
            theta = ", ".join(f"{c:+.4f}" for c in f.theta)
            table.add_row(f"{f.q:g}", f"{f.minimum:.10g}", f"{f.expected_minimum:.10g}", f"({theta})", str(f.detected))
        console.print(table)
        payload = [f.model_dump(mode="json") for f in findings]
    else:
        result = service.entangling_map(p, convention)
        if result.is_err():
            raise _fail_fake_detection(result.unwrap_err())
        report = result.unwrap()
        table = Table(title=f"Entangling map |χ_st⟩ ({report.convention})", box=box.SIMPLE)
        for column in ("p", "value", "detected"):
            table.add_column(column, justify="right")
        for f in report.sweep:
            table.add_row(f"{f.p:g}", f"{f.value:.10g}", str(f.detected))
        console.print(table)
        conventions = "\n".join(f"{name:>8}: {value:+.10g}" for name, value in report.conventions_at_zero.items())
        console.print(Panel(conventions, title="p = 0 under each |ψ⊥⟩ phase", border_style="blue"))
        payload = report.model_dump(mode="json")

    if state.out is not None:
        write_text(state.out, json.dumps(payload, indent=2))


# ---------------------------------------------------------------- scan


def _scan_document(
    state: CliState,
    kind: ScanKind | None,
    axis1: str | None,
    axis2: str | None,
    fixed: list[str],
    method: ThresholdMethod | None,
) -> dict[str, Any]:
    """Config file values, overridden by flags."""
    document: dict[str, Any] = dict(read_json(state.config)) if state.config is not None else {}
    if kind is not None:
        document["noise_kind"] = str(kind)
    if "noise_kind" not in document:
        raise ScanConfigError("no noise kind given (--kind or noise_kind in --config)", field="noise_kind")

    names = ScanKind(document["noise_kind"]).axis_names()
    steps = settings_factory.create_scan_settings().default_steps
    for key, flag, name in (("axis1", axis1, names[0]), ("axis2", axis2, names[1])):
        if flag is not None:
            document[key] = _parse_axis(flag)
        document.setdefault(key, {"name": name, "min": 0.0, "max": 1.0, "steps": steps})

    document["fixed"] = {**document.get("fixed", {}), **_parse_pairs(fixed, "--fixed")}
    if method is not None:
        document["method"] = str(method)
    if state.out is not None:
        document["output_path"] = str(state.out)
    if state.seed is not None:
        document["seed"] = state.seed
    return document


@app.command()
def scan(
    ctx: typer.Context,
    kind: Optional[ScanKind] = typer.Option(None, "--kind", help="Threshold family to sweep"),
    axis1: Optional[str] = typer.Option(None, "--axis1", help="name:min:max:steps"),
    axis2: Optional[str] = typer.Option(None, "--axis2", help="name:min:max:steps"),
    fixed: list[str] = typer.Option([], "--fixed", help="Fixed parameter as key=value (repeatable)"),
    method: Optional[ThresholdMethod] = typer.Option(None, "--method", help="closed_form or numeric"),
) -> None:
    """
    Sweep v* over two noise parameters and write the grid as CSV
    """
    state = _state(ctx)
    try:
        config = ScanConfig.from_document(_scan_document(state, kind, axis1, axis2, fixed, method))
    except ScanConfigError as e:
        raise _fail(f"{e} (field: {e.field})", EXIT_USAGE)
    except (OSError, ValueError) as e:
        raise _fail(str(e), EXIT_USAGE)

    result = ScanService.create_default().run(config)
    if result.is_err():
        error = result.unwrap_err()
        code = EXIT_FAILED if error["kind"] == "numeric" else EXIT_USAGE
        where = error.get("path") or error.get("field")
        raise _fail(f"{error['error']}" + (f" ({where})" if where else ""), code)

    grid: ScanResult = result.unwrap()
    detectable = sum(1 for row in grid.grid for v in row if v <= 1)
    cells = len(grid.axis1_values) * len(grid.axis2_values)
    if config.output_path is None:
        sys.stdout.write(grid.to_csv_text(settings_factory.create_scan_settings().significant_digits))
    else:
        console.print(f"[green]✓ Wrote {config.output_path}[/green] ({detectable}/{cells} detectable cells)")


# ---------------------------------------------------------------- threshold


def display_comparison(comparison: ThresholdComparison) -> None:
    def describe(result: ThresholdResult) -> str:
        return f"{_format_v(result.v_star)}  ({result.formula_id}, {'detectable' if result.detectable else 'never'})"

    table = Table(title="v* thresholds", box=box.SIMPLE, show_header=False)
    table.add_column("", style="cyan")
    table.add_column("")
    table.add_row("closed form", describe(comparison.closed_form))
    table.add_row("numeric", describe(comparison.numeric))
    table.add_row("difference", _format_v(comparison.difference))
    table.add_row("agree", "[green]yes[/green]" if comparison.agree else "[red]no[/red]")
    console.print(table)


@app.command()
def threshold(
    ctx: typer.Context,
    kind: Optional[ScanKind] = typer.Option(None, "--kind", help="Threshold family"),
    param: list[str] = typer.Option([], "--param", help="Parameter as key=value (repeatable)"),
    spec: Optional[Path] = typer.Option(None, "--spec", help="NoiseSpec JSON instead of --kind/--param"),
    convention: SumConvention = typer.Option(
        SumConvention.UNORDERED_PAIRS, "--convention", help="Pair sum used by the correlated Pauli closed form"
    ),
) -> None:
    """
    Print the closed-form and numeric v* side by side; exit 1 if they disagree
    """
    state = _state(ctx)
    service = ThresholdService.create_default()
    if spec is not None:
        try:
            noise = parse_noise_spec(Path(spec).read_text(encoding="utf-8"))
        except (OSError, ValidationError) as e:
            raise _fail(f"cannot load noise spec {spec}: {e}", EXIT_USAGE)
        result = service.compare(noise, convention)
    elif kind is not None:
        params = _parse_pairs(param, "--param")
        params.setdefault("convention", float(list(SumConvention).index(convention)))
        result = service.compare_params(kind, params)
    else:
        raise _fail("give --kind with --param, or --spec", EXIT_USAGE)

    if result.is_err():
        error = result.unwrap_err()
        if error["kind"] == "disagreement":
            display_comparison(error["comparison"])
            raise _fail("closed form and numeric thresholds disagree", EXIT_FAILED)
        raise _fail(error["error"], EXIT_USAGE if error["kind"] == "config" else EXIT_FAILED)

    comparison = result.unwrap()
    display_comparison(comparison)
    if state.out is not None:
        write_text(state.out, comparison.model_dump_json(indent=2))


# ---------------------------------------------------------------- conventions


def display_conventions(rows: list[MemoryConventionRow]) -> None:
    table = Table(title="Memory channel pair-sum conventions", box=box.SIMPLE)
    table.add_column("m", justify="right")
    table.add_column("convention", style="cyan")
    table.add_column("closed form", justify="right")
    table.add_column("numeric", justify="right")
    table.add_column("matches")
    for row in rows:
        matches = "[green]yes[/green]" if row.matches else "[red]no[/red]"
        table.add_row(f"{row.m:g}", str(row.convention), _format_v(row.closed_form), _format_v(row.numeric), matches)
    console.print(table)


@app.command()
def conventions(
    ctx: typer.Context,
    m: list[float] = typer.Option([0.0, 0.5, 1.0], "--m", help="Memory strength(s) to compare at"),
    probs: list[float] = typer.Option([0.2, 0.3, 0.5], "--probs", help="Pauli probabilities, one per index"),
    index_set: IndexSet = typer.Option(IndexSet.PAULI, "--index-set", help="pauli (1..3) or full (0..3)"),
) -> None:
    """
    Report which pair-sum convention of the memory-channel closed form matches the numeric v*
    """
    state = _state(ctx)
    result = ThresholdService.create_default().memory_conventions(m, probs, index_set)
    if result.is_err():
        error = result.unwrap_err()
        raise _fail(error["error"], EXIT_USAGE if error["kind"] == "config" else EXIT_FAILED)

    rows = result.unwrap()
    display_conventions(rows)
    for value in m:
        matching = [str(row.convention) for row in rows if row.m == value and row.matches]
        console.print(f"m={value:g}: matches {', '.join(matching) or 'none'}")
    if state.out is not None:
        write_text(state.out, json.dumps([row.model_dump(mode="json") for row in rows], indent=2))


# ---------------------------------------------------------------- schema / version


@app.command()
def schema() -> None:
    """
    Print the JSON schemas of the scan configuration and the noise specification
    """
    document = {"ScanConfig": ScanConfig.model_json_schema(), "NoiseSpec": noise_spec_adapter.json_schema()}
    sys.stdout.write(json.dumps(document, indent=2) + "\n")


@app.command()
def version() -> None:
    """
    Show the version
    """
    console.print(f"mdimate {__version__}")


def main() -> None:
    app()


if __name__ == "__main__":
    main()
