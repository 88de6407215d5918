"""Per-column benchmark fixture shared by unit and acceptance tests.

Each target row pins (ttft_ms, itl_ms, tps, watts) for a (device,
model) cell.  Because ttft, mean ITL and decode-window throughput are
not jointly realizable by one trace for arbitrary targets, every column
value is produced from its own small fixture trace / power script and
the row is assembled from the per-column results.
"""

from sankofa.metrics.benchmark import BenchmarkReport, ReportRow
from sankofa.metrics.latency import compute_metrics
from sankofa.metrics.power import sample_script, summarize_power
from sankofa.metrics.trace import InferenceTrace

MS = 1_000_000

TARGET_ROWS = [
    ("jetson-nano", "inkubalm", 129.0, 33.0, 45.2, 8.4),
    ("jetson-nano", "lugha-llama", 139.0, 57.0, 28.3, 8.5),
    ("jetson-nano", "nguni-xlmr", 379.0, 65.0, 23.5, 8.8),
    ("raspberry-pi-4b", "inkubalm", 326.0, 95.0, 15.9, 5.8),
    ("raspberry-pi-4b", "lugha-llama", 425.0, 105.0, 14.2, 6.2),
    ("raspberry-pi-4b", "nguni-xlmr", 625.0, 137.0, 12.7, 6.3),
]


def ttft_trace(ttft_ms):
    t0 = int(ttft_ms * MS)
    return InferenceTrace("fx-ttft", 0, [t0, t0 + MS], t0 + MS)


def itl_trace(itl_ms):
    times = [100 * MS + i * int(itl_ms * MS) for i in range(5)]
    return InferenceTrace("fx-itl", 0, times, times[-1])


def tps_trace(tps):
    window_ns = round(1e9 / tps)
    return InferenceTrace("fx-tps", 0, [MS, MS + window_ns], MS + window_ns)


def power_samples(watts, window_end):
    return sample_script([(0.0, int(watts * 1e6))], 0, window_end, period_ms=100.0)


def build_fixture_report() -> BenchmarkReport:
    rows = []
    for device, model, ttft, itl, tps, watts in TARGET_ROWS:
        window_end = 1000 * MS
        rows.append(
            ReportRow(
                device=device,
                model=model,
                ttft_ms=compute_metrics(ttft_trace(ttft)).ttft_ms,
                itl_ms_mean=compute_metrics(itl_trace(itl)).itl_ms_mean,
                throughput_tps=compute_metrics(tps_trace(tps)).throughput_tps,
                avg_watts=summarize_power(
                    power_samples(watts, window_end), 0, window_end
                ).avg_watts,
            )
        )
    return BenchmarkReport(rows=rows, runs=1, warmup_runs=0)
