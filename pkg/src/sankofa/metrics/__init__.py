"""Inference metrology: token-level latency, power integration, reports."""

from sankofa.metrics.trace import EmptyStream, InferenceTrace, MetricsStore, record_trace
from sankofa.metrics.latency import LatencyMetrics, compute_metrics, percentile
from sankofa.metrics.power import (
    FilePowerProvider,
    NoSamplesInWindow,
    PowerSample,
    PowerSummary,
    ScriptPowerProvider,
    load_power_script,
    sample_script,
    summarize_power,
)
from sankofa.metrics.benchmark import BenchmarkPlan, BenchmarkReport, CellSpec, ReportRow, run_benchmark
from sankofa.metrics.report import parse_machine_report, render_report

__all__ = [
    "EmptyStream",
    "InferenceTrace",
    "MetricsStore",
    "record_trace",
    "LatencyMetrics",
    "compute_metrics",
    "percentile",
    "FilePowerProvider",
    "NoSamplesInWindow",
    "PowerSample",
    "PowerSummary",
    "ScriptPowerProvider",
    "load_power_script",
    "sample_script",
    "summarize_power",
    "BenchmarkPlan",
    "BenchmarkReport",
    "CellSpec",
    "ReportRow",
    "run_benchmark",
    "parse_machine_report",
    "render_report",
]
