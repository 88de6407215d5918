"""Latency metrics derived from an inference trace.

Definitions:
  ttft       = token_times[0] - request_sent_at
  ITL sample = difference between consecutive token times
  throughput = (token_count - 1) / (token_times[-1] - token_times[0]),
               i.e. tokens per second over the decode window; undefined
               (reported as 0 with a flag) for single-token traces.

Percentiles use linear interpolation between order statistics.
"""

from dataclasses import dataclass

from sankofa.clock import ns_to_ms
from sankofa.metrics.trace import InferenceTrace


@dataclass
class LatencyMetrics:
    ttft_ms: float
    itl_ms_mean: float
    itl_ms_p50: float
    itl_ms_p95: float
    throughput_tps: float
    token_count: int
    single_token: bool = False

    def __post_init__(self):
        if self.token_count < 1:
            raise ValueError("token_count must be >= 1")
        values = (self.ttft_ms, self.itl_ms_mean, self.itl_ms_p50, self.itl_ms_p95, self.throughput_tps)
        if any(v < 0 for v in values):
            raise ValueError("latency metrics must be non-negative")
        if self.itl_ms_p50 > self.itl_ms_p95:
            raise ValueError("p50 exceeds p95")


def percentile(values: list[float], q: float) -> float:
    """q-th percentile (0..100) with linear interpolation."""
    if not values:
        raise ValueError("no values")
    if not 0 <= q <= 100:
        raise ValueError(f"percentile out of range: {q}")
    ordered = sorted(values)
    if len(ordered) == 1:
        return ordered[0]
    pos = (len(ordered) - 1) * q / 100.0
    lower = int(pos)
    frac = pos - lower
    if lower + 1 == len(ordered):
        return ordered[-1]
    return ordered[lower] + frac * (ordered[lower + 1] - ordered[lower])


def compute_metrics(trace: InferenceTrace) -> LatencyMetrics:
    ttft_ms = ns_to_ms(trace.token_times[0] - trace.request_sent_at)
    if len(trace.token_times) == 1:
        return LatencyMetrics(
            ttft_ms=ttft_ms,
            itl_ms_mean=0.0,
            itl_ms_p50=0.0,
            itl_ms_p95=0.0,
            throughput_tps=0.0,
            token_count=1,
            single_token=True,
        )
    gaps_ms = [
        ns_to_ms(b - a) for a, b in zip(trace.token_times, trace.token_times[1:])
    ]
    window_s = (trace.token_times[-1] - trace.token_times[0]) / 1e9
    # zero-width decode window (all tokens in one instant) has no defined rate
    tps = (len(trace.token_times) - 1) / window_s if window_s > 0 else 0.0
    return LatencyMetrics(
        ttft_ms=ttft_ms,
        itl_ms_mean=sum(gaps_ms) / len(gaps_ms),
        itl_ms_p50=percentile(gaps_ms, 50),
        itl_ms_p95=percentile(gaps_ms, 95),
        throughput_tps=tps,
        token_count=len(trace.token_times),
    )
