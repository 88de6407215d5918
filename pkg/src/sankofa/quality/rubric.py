"""Human rubric scores (cultural relevance, fluency) and their aggregation.

Scores are collected elsewhere; this module only parses and averages
them.  All arithmetic runs on ``Decimal`` so printed-precision values
like 4.4 reproduce exactly, and rounding is half-up to match reporting
conventions (``round_half_up``).
"""

from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from pathlib import Path

from sankofa import SankofaError


class MissingMetric(SankofaError):
    pass


class RubricMetric(Enum):
    CULTURAL_RELEVANCE = "cultural_relevance"
    FLUENCY = "fluency"


@dataclass(frozen=True)
class RubricScore:
    language: str
    metric: RubricMetric
    value: Decimal
    rater_id: str

    def __post_init__(self):
        if not Decimal(1) <= self.value <= Decimal(5):
            raise ValueError(f"rubric value out of [1, 5]: {self.value}")


def round_half_up(value: Decimal | float | str, places: int) -> Decimal:
    if not isinstance(value, Decimal):
        value = Decimal(str(value))
    quantum = Decimal(1).scaleb(-places)
    return value.quantize(quantum, rounding=ROUND_HALF_UP)


def _mean(values: list[Decimal]) -> Decimal:
    return sum(values, Decimal(0)) / Decimal(len(values))


def aggregate_rubric(
    scores: list[RubricScore], places: int = 1
) -> tuple[dict[str, dict[RubricMetric, Decimal]], dict[RubricMetric, Decimal]]:
    """Mean over raters per (language, metric), then mean over languages.

    Returns (per_language, overall); every value is rounded half-up to
    ``places`` decimals, and the overall mean is taken over the rounded
    per-language values, matching how reports print.
    """
    if not scores:
        raise MissingMetric("no rubric scores supplied")

    by_key: dict[tuple[str, RubricMetric], list[Decimal]] = {}
    for s in scores:
        by_key.setdefault((s.language, s.metric), []).append(s.value)

    languages = sorted({lang for lang, _ in by_key})
    metrics = sorted({m for _, m in by_key}, key=lambda m: m.value)
    per_language: dict[str, dict[RubricMetric, Decimal]] = {}
    for lang in languages:
        per_language[lang] = {}
        for metric in metrics:
            values = by_key.get((lang, metric))
            if values is None:
                raise MissingMetric(f"no {metric.value} scores for language {lang!r}")
            per_language[lang][metric] = round_half_up(_mean(values), places)

    overall = {
        metric: round_half_up(_mean([per_language[lang][metric] for lang in languages]), places)
        for metric in metrics
    }
    return per_language, overall


def load_rubric_file(path: str | Path) -> list[RubricScore]:
    """Parse line-delimited ``language metric value rater_id`` records."""
    scores = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"{path}:{lineno}: expected 'language metric value rater_id'")
        language, metric_name, value, rater_id = parts
        try:
            metric = RubricMetric(metric_name)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: unknown metric {metric_name!r}") from None
        scores.append(RubricScore(language, metric, Decimal(value), rater_id))
    return scores
