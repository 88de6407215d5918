"""Multilingual quality evaluation: corpus BLEU and rubric aggregation."""

from sankofa.quality.bleu import BleuConfig, BleuResult, Smoothing, bleu, tokenize
from sankofa.quality.rubric import RubricMetric, RubricScore, aggregate_rubric, load_rubric_file
from sankofa.quality.report import QualityReport, build_quality_report, render_quality_report

__all__ = [
    "BleuConfig",
    "BleuResult",
    "Smoothing",
    "bleu",
    "tokenize",
    "RubricMetric",
    "RubricScore",
    "aggregate_rubric",
    "load_rubric_file",
    "QualityReport",
    "build_quality_report",
    "render_quality_report",
]
