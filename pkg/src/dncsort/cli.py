from __future__ import annotations

import json
from typing import Callable, List, Optional, TypeVar

import typer
from pydantic import ValidationError

from dncsort.algorithms import TRACE_NAMES, sort_array
from dncsort.bench import bench as bench_run, rows_document
from dncsort.config import (
    Algo,
    BenchSettings,
    MergeBackend,
    SortSettings,
    TraceSettings,
    VerifySettings,
)
from dncsort.contracts import Checker, CheckMode, ContractViolation
from dncsort.core import UsageError
from dncsort.display import (
    build_bench_render,
    build_verify_render,
    build_violation_panel,
    print_data,
)
from dncsort.ioformat import InputFormatError, format_ints, read_ints, write_text
from dncsort.logging import err_console, get_logger, set_verbose
from dncsort.mutants import Mutant
from dncsort.trace import TraceRecorder
from dncsort.verify import verify as verify_run

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

T = TypeVar("T")

app = typer.Typer(
    name="dncsort",
    add_completion=False,
    no_args_is_help=True,
    help="Contract-checked divide-and-conquer sorting: sort, verify, trace and bench.",
)

log = get_logger(__name__)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Enable verbose logs."),
) -> None:
    set_verbose(verbose)


def _usage_error(e: Exception) -> typer.Exit:
    err_console().print(f"[red]Error:[/red] {e}")
    return typer.Exit(EXIT_USAGE)


def _settings(build: Callable[[], T]) -> T:
    try:
        return build()
    except ValidationError as e:
        raise _usage_error(e)


def _read_values(source: str) -> List[int]:
    try:
        return read_ints(source)
    except (InputFormatError, UnicodeDecodeError, OSError) as e:
        raise _usage_error(e)


def _write(sink: str, text: str) -> None:
    try:
        write_text(sink, text)
    except OSError as e:
        raise _usage_error(e)


def _run_sort(algo: Algo, values: List[int], ck: Checker, backend: MergeBackend) -> None:
    try:
        sort_array(algo, values, ck, backend)
    except ContractViolation as exc:
        err_console().print(build_violation_panel(exc.violation))
        raise typer.Exit(EXIT_VIOLATION)
    except UsageError as e:
        raise _usage_error(e)


def _parse_sizes(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise _usage_error(ValueError(f"--sizes expects comma-separated counts, got {text!r}"))


# ---- sort ---------------------------------------------------------------------------

@app.command("sort")
def sort(
    algo: Algo = typer.Option(Algo.REC, "--algo", "-a", help="Sorting algorithm."),
    mode: CheckMode = typer.Option(CheckMode.UNCHECKED, "--mode", "-m", help="Check mode."),
    backend: MergeBackend = typer.Option(MergeBackend.REC, "--backend", help="Merge backend for rec."),
    input: str = typer.Option("-", "--input", "-i", help="Input file, or - for stdin."),
    output: str = typer.Option("-", "--output", "-o", help="Output file, or - for stdout."),
) -> None:
    """
    Sort whitespace-separated integers; writes one per line.
    """
    settings = _settings(lambda: SortSettings(algo=algo, mode=mode, backend=backend))
    values = _read_values(input)
    ck = Checker(mode=settings.mode)
    _run_sort(settings.algo, values, ck, settings.backend)
    log.debug("sorted %d values with %d comparisons", len(values), ck.comparisons)
    _write(output, format_ints(values))


# ---- verify -------------------------------------------------------------------------

@app.command("verify")
def verify(
    algo: Optional[List[Algo]] = typer.Option(None, "--algo", "-a", help="Algorithm(s); default all."),
    mode: CheckMode = typer.Option(CheckMode.FULL, "--mode", "-m", help="Check mode."),
    backend: MergeBackend = typer.Option(MergeBackend.REC, "--backend", help="Merge backend for rec."),
    cases: int = typer.Option(100, "--cases", "-n", help="Number of random cases."),
    seed: int = typer.Option(0, "--seed", "-s", help="Campaign seed."),
    max_len: int = typer.Option(64, "--max-len", help="Maximum array length."),
    low: int = typer.Option(-5, "--low", help="Smallest generated value."),
    high: int = typer.Option(5, "--high", help="Largest generated value."),
    workers: int = typer.Option(1, "--workers", "-j", help="Worker threads."),
    shrink: bool = typer.Option(True, "--shrink/--no-shrink", help="Minimize failing inputs."),
    output: str = typer.Option("-", "--output", "-o", help="JSON report file, or - for stdout."),
    mutant: Optional[Mutant] = typer.Option(None, "--mutant", hidden=True),
) -> None:
    """
    Run a seeded verification campaign in the chosen check mode.
    """
    settings = _settings(lambda: VerifySettings(
        algos=algo or list(Algo),
        mode=mode,
        backend=backend,
        cases=cases,
        seed=seed,
        max_len=max_len,
        low=low,
        high=high,
        workers=workers,
        shrink=shrink,
        mutant=mutant,
    ))
    report = verify_run(settings)
    _write(output, json.dumps(report.to_dict(), ensure_ascii=False) + "\n")
    err_console().print(build_verify_render(report))
    if not report.ok:
        raise typer.Exit(EXIT_VIOLATION)


# ---- trace --------------------------------------------------------------------------

@app.command("trace")
def trace(
    algo: Algo = typer.Option(Algo.REC, "--algo", "-a", help="Sorting algorithm."),
    backend: MergeBackend = typer.Option(MergeBackend.REC, "--backend", help="Merge backend for rec."),
    input: str = typer.Option("-", "--input", "-i", help="Input file, or - for stdin."),
    output: str = typer.Option("-", "--output", "-o", help="Output file, or - for stdout."),
) -> None:
    """
    Emit the divide/combine (or level pass) event stream as JSON.
    """
    settings = _settings(lambda: TraceSettings(algo=algo, backend=backend))
    values = _read_values(input)
    recorder = TraceRecorder(TRACE_NAMES[settings.algo])
    _run_sort(settings.algo, values, Checker(trace=recorder), settings.backend)
    _write(output, recorder.dumps(settings.algo.value, len(values)))


# ---- bench --------------------------------------------------------------------------

@app.command("bench")
def bench(
    algo: Optional[List[Algo]] = typer.Option(None, "--algo", "-a", help="Algorithm(s); default all."),
    sizes: str = typer.Option("1000", "--sizes", help="Comma-separated array sizes."),
    repeats: int = typer.Option(3, "--repeats", "-r", help="Runs per size; the median is reported."),
    seed: int = typer.Option(0, "--seed", "-s", help="Data seed."),
    backend: MergeBackend = typer.Option(MergeBackend.REC, "--backend", help="Merge backend for rec."),
    json_out: bool = typer.Option(False, "--json", help="Output JSON."),
) -> None:
    """
    Median wall time and comparison counts in unchecked mode.
    """
    settings = _settings(lambda: BenchSettings(
        algos=algo or list(Algo),
        sizes=_parse_sizes(sizes),
        repeats=repeats,
        seed=seed,
        backend=backend,
    ))
    rows = bench_run(settings)
    print_data(rows_document(rows), build_bench_render(rows), json_out)
