"""Quality report: per-language BLEU + rubric rows and the overall mean row.

BLEU prints with 3 decimals, rubric columns with 1; the overall row is the
unweighted mean of the rounded per-language rows, rounded again half-up,
so a printed table is exactly reproducible from its own row values.
"""

from dataclasses import dataclass
from decimal import Decimal

from sankofa import SankofaError
from sankofa.quality.rubric import RubricMetric, RubricScore, aggregate_rubric, round_half_up


class LanguageSetMismatch(SankofaError):
    pass


@dataclass(frozen=True)
class QualityRow:
    language: str
    model: str
    bleu: Decimal
    cultural_relevance: Decimal
    fluency: Decimal


@dataclass
class QualityReport:
    rows: list[QualityRow]
    overall: QualityRow  # language field holds the row label


OVERALL_LABEL = "average-overall"


def build_quality_report(
    bleu_by_language: dict[str, tuple[str, Decimal | float | str]],
    rubric_scores: list[RubricScore],
) -> QualityReport:
    """Combine per-language (model, BLEU) values with rubric scores.

    ``bleu_by_language`` maps language -> (model name, BLEU in [0, 1]).
    Rows keep the given language order; the overall row is appended.
    """
    per_language, _ = aggregate_rubric(rubric_scores, places=1)
    bleu_langs = set(bleu_by_language)
    rubric_langs = set(per_language)
    if bleu_langs != rubric_langs:
        raise LanguageSetMismatch(
            f"BLEU languages {sorted(bleu_langs)} != rubric languages {sorted(rubric_langs)}"
        )

    rows = []
    for language, (model, bleu_value) in bleu_by_language.items():
        rows.append(
            QualityRow(
                language=language,
                model=model,
                bleu=round_half_up(bleu_value, 3),
                cultural_relevance=per_language[language][RubricMetric.CULTURAL_RELEVANCE],
                fluency=per_language[language][RubricMetric.FLUENCY],
            )
        )

    n = Decimal(len(rows))
    overall = QualityRow(
        language=OVERALL_LABEL,
        model="-",
        bleu=round_half_up(sum((r.bleu for r in rows), Decimal(0)) / n, 3),
        cultural_relevance=round_half_up(
            sum((r.cultural_relevance for r in rows), Decimal(0)) / n, 1
        ),
        fluency=round_half_up(sum((r.fluency for r in rows), Decimal(0)) / n, 1),
    )
    return QualityReport(rows=rows, overall=overall)


def render_quality_report(report: QualityReport, machine: bool = False) -> str:
    """Render the quality block; machine rows are space-delimited."""
    all_rows = report.rows + [report.overall]
    if machine:
        lines = ["# language model bleu cultrel fluency"]
        for r in all_rows:
            lines.append(f"{r.language} {r.model} {r.bleu} {r.cultural_relevance} {r.fluency}")
        return "\n".join(lines) + "\n"

    headers = ("Language", "Model", "BLEU", "Cult. Rel. (1-5)", "Fluency (1-5)")
    table = [headers]
    for r in all_rows:
        table.append((r.language, r.model, str(r.bleu), str(r.cultural_relevance), str(r.fluency)))
    widths = [max(len(row[i]) for row in table) for i in range(len(headers))]
    lines = []
    for i, row in enumerate(table):
        lines.append("  ".join(cell.ljust(widths[j]) for j, cell in enumerate(row)).rstrip())
        if i == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"
