from __future__ import annotations

from typing import Any, Iterable, Sequence, Tuple

from rich import box
from rich.console import Group
from rich.panel import Panel
from rich.table import Table

from .bench import BenchRow
from .contracts import VerificationReport, Violation
from .logging import console


def _kv_lines(items: Iterable[Tuple[str, Any]]) -> str:
    return "\n".join(f"[bold]{k}[/]: {v}" for k, v in items)


def print_data(data: Any, renderable: Any, as_json: bool) -> None:
    if as_json:
        console().print_json(data=data)
    else:
        console().print(renderable)


def build_bench_render(rows: Sequence[BenchRow]) -> Table:
    t = Table(title="Benchmark", box=box.SIMPLE_HEAVY, show_lines=False)
    t.add_column("Algo")
    t.add_column("n", justify="right")
    t.add_column("Median (s)", justify="right")
    t.add_column("Comparisons", justify="right")
    for r in rows:
        t.add_row(r.algo, str(r.n), f"{r.median_seconds:.6f}", str(r.comparisons))
    return t


def build_violations_render(violations: Sequence[Violation]) -> Table:
    t = Table(title="Violations", box=box.SIMPLE_HEAVY, show_lines=False)
    for h in ("Case", "Proviso", "Where", "Detail", "Shrunk input"):
        t.add_column(h)
    for v in violations:
        t.add_row(
            str(v.case_index if v.case_index is not None else "-"),
            v.proviso.value,
            str(v.location),
            v.detail,
            " ".join(str(x) for x in v.shrunk_input) if v.shrunk_input is not None else "-",
        )
    return t


def build_verify_render(report: VerificationReport) -> Panel:
    summary = _kv_lines([
        ("Runs", report.cases_run),
        ("Seed", report.seed),
        ("Elapsed (s)", f"{report.elapsed:.2f}"),
        ("Violations", len(report.violations)),
    ])
    if report.ok:
        return Panel(summary, title="[green]Verify: OK[/green]", box=box.ROUNDED)
    group = Group(summary, build_violations_render(report.violations))
    return Panel(group, title="[red]Verify: FAILED[/red]", box=box.ROUNDED)


def build_violation_panel(violation: Violation) -> Panel:
    content = _kv_lines([
        ("Proviso", violation.proviso.value),
        ("Where", violation.location),
        ("Detail", violation.detail),
        ("Before", list(violation.before)),
        ("After", list(violation.after)),
    ])
    return Panel(content, title="Contract violation", box=box.ROUNDED)
