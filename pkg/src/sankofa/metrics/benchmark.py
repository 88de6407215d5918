"""Benchmark runs over (device, model) cells and median aggregation.

Each cell replays a token script (plus a power script) on a fresh
virtual clock per run; warmup runs execute and are discarded, then every
metric column takes the median over the measured runs.  A failing cell
yields a row with no values; the report is still produced.
"""

import statistics
from dataclasses import dataclass, field

from sankofa.clock import VirtualClock
from sankofa.content.backends import mock_backend
from sankofa.content.generate import GenerationRequest, generate_stream
from sankofa.metrics.latency import compute_metrics
from sankofa.metrics.power import sample_script, summarize_power
from sankofa.metrics.trace import record_trace


@dataclass
class CellSpec:
    device: str
    model: str
    script: list[tuple[float, str]] = field(default_factory=list)
    power_script: list[tuple[float, int]] = field(default_factory=lambda: [(0.0, 0)])
    language: str = "sw"
    max_tokens: int = 4096
    power_period_ms: float = 100.0
    # tests and live setups may supply backends directly; fall back to a
    # script-driven mock on a fresh virtual clock per run
    make_backend: object = None


@dataclass
class ReportRow:
    device: str
    model: str
    ttft_ms: float | None
    itl_ms_mean: float | None
    throughput_tps: float | None
    avg_watts: float | None
    failed: bool = False


@dataclass
class BenchmarkPlan:
    cells: list[CellSpec]
    runs: int = 5
    warmup_runs: int = 2

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be >= 1")
        seen = set()
        for cell in self.cells:
            key = (cell.device, cell.model)
            if key in seen:
                raise ValueError(f"duplicate benchmark cell {key}")
            seen.add(key)


@dataclass
class BenchmarkReport:
    rows: list[ReportRow]
    runs: int
    warmup_runs: int
    aggregation: str = "median"


def _run_cell_once(cell: CellSpec, run_index: int) -> tuple[float, float, float, float]:
    clock = VirtualClock()
    if cell.make_backend is not None:
        backend = cell.make_backend(run_index, clock)
    else:
        backend = mock_backend(
            name=cell.model,
            languages=frozenset({cell.language}),
            script=cell.script,
            clock=clock,
        )
    request = GenerationRequest(language=cell.language, max_tokens=cell.max_tokens)
    stream = generate_stream(request, backend, clock)
    trace = record_trace(stream)
    if trace.error:
        raise RuntimeError(f"cell ({cell.device}, {cell.model}) run failed: {trace.error}")
    metrics = compute_metrics(trace)
    power = summarize_power(
        sample_script(
            cell.power_script, trace.request_sent_at, trace.completed_at, cell.power_period_ms
        ),
        trace.request_sent_at,
        trace.completed_at,
    )
    return metrics.ttft_ms, metrics.itl_ms_mean, metrics.throughput_tps, power.avg_watts


def run_benchmark(plan: BenchmarkPlan) -> BenchmarkReport:
    rows = []
    for cell in plan.cells:
        measurements = []
        failed = False
        try:
            for run_index in range(plan.warmup_runs + plan.runs):
                values = _run_cell_once(cell, run_index)
                if run_index >= plan.warmup_runs:
                    measurements.append(values)
        except Exception:
            failed = True
        if failed or not measurements:
            rows.append(ReportRow(cell.device, cell.model, None, None, None, None, failed=True))
            continue
        columns = list(zip(*measurements))
        rows.append(
            ReportRow(
                device=cell.device,
                model=cell.model,
                ttft_ms=statistics.median(columns[0]),
                itl_ms_mean=statistics.median(columns[1]),
                throughput_tps=statistics.median(columns[2]),
                avg_watts=statistics.median(columns[3]),
            )
        )
    rows.sort(key=lambda r: (r.device, r.model))
    return BenchmarkReport(rows=rows, runs=plan.runs, warmup_runs=plan.warmup_runs)
