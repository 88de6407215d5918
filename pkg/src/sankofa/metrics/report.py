"""Benchmark report rendering: human table and machine rows.

Machine format: header ``# device model ttft_ms itl_ms tps watts``, then
space-delimited rows with every real printed to one decimal.  Failed or
missing cells render as ``-``.
"""

from sankofa.metrics.benchmark import BenchmarkReport, ReportRow

MACHINE_HEADER = "# device model ttft_ms itl_ms tps watts"

HUMAN_HEADERS = (
    "Edge Device",
    "Core Model",
    "TTFT (ms)",
    "Avg. ITL",
    "Throughput (t/s)",
    "Power (W)",
)


def _fmt(value: float | None) -> str:
    return "-" if value is None else f"{value:.1f}"


def render_report(report: BenchmarkReport, machine: bool = False) -> str:
    if not report.rows:
        raise ValueError("empty benchmark report")
    if machine:
        lines = [MACHINE_HEADER]
        for r in report.rows:
            lines.append(
                f"{r.device} {r.model} {_fmt(r.ttft_ms)} {_fmt(r.itl_ms_mean)} "
                f"{_fmt(r.throughput_tps)} {_fmt(r.avg_watts)}"
            )
        return "\n".join(lines) + "\n"

    table = [HUMAN_HEADERS]
    for r in report.rows:
        table.append(
            (
                r.device,
                r.model,
                _fmt(r.ttft_ms),
                _fmt(r.itl_ms_mean),
                _fmt(r.throughput_tps),
                _fmt(r.avg_watts),
            )
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(HUMAN_HEADERS))]
    lines = []
    for i, row in enumerate(table):
        lines.append("  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    lines.append(
        f"runs={report.runs} warmup={report.warmup_runs} aggregation={report.aggregation}"
    )
    return "\n".join(lines) + "\n"


def parse_machine_report(text: str) -> BenchmarkReport:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines or lines[0] != MACHINE_HEADER:
        raise ValueError("not a machine benchmark report")
    rows = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 6:
            raise ValueError(f"malformed report row: {line!r}")
        device, model = parts[0], parts[1]
        values = [None if p == "-" else float(p) for p in parts[2:]]
        rows.append(
            ReportRow(
                device=device,
                model=model,
                ttft_ms=values[0],
                itl_ms_mean=values[1],
                throughput_tps=values[2],
                avg_watts=values[3],
                failed=all(v is None for v in values),
            )
        )
    return BenchmarkReport(rows=rows, runs=0, warmup_runs=0)
