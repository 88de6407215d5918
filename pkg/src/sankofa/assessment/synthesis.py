"""Assessment synthesis: keyword templates applied to generated content.

Each template carries calibrated (a, b, c) parameters and a trigger
keyword; a template matches when its keyword occurs in the content text
(case-insensitive).  Matching is deterministic, so a fixed content +
bank always yields the same pool.  The demonstration bank below is
fixture data for demos and tests, not calibrated field values.
"""

from dataclasses import dataclass
from pathlib import Path

from sankofa import SankofaError
from sankofa.assessment.irt import ItemParams


class NoTemplatesMatched(SankofaError):
    pass


@dataclass(frozen=True)
class AssessmentTemplate:
    template_id: str
    keyword: str
    a: float
    b: float
    c: float
    prompt: str


DEMO_BANK: tuple[AssessmentTemplate, ...] = (
    AssessmentTemplate("itm-01", "fraction", 1.6, -1.5, 0.20, "Which picture shows the fraction named in the lesson?"),
    AssessmentTemplate("itm-02", "whole", 1.2, -2.0, 0.25, "How many equal parts make up the whole?"),
    AssessmentTemplate("itm-03", "compare", 1.8, -0.5, 0.20, "Which of the two values is larger?"),
    AssessmentTemplate("itm-04", "denominator", 1.5, 0.0, 0.20, "What does the number below the line tell you?"),
    AssessmentTemplate("itm-05", "add", 1.4, -1.0, 0.25, "Work out the sum shown in the example."),
    AssessmentTemplate("itm-06", "practice", 1.7, 0.5, 0.20, "Solve the practice task from the lesson."),
    AssessmentTemplate("itm-07", "share", 1.3, 1.0, 0.25, "Share the quantity equally and name each part."),
    AssessmentTemplate("itm-08", "learn", 1.1, 1.5, 0.20, "Explain the rule you just learned in one sentence."),
    AssessmentTemplate("itm-09", "decimal", 1.5, 0.8, 0.20, "Write the value as a decimal."),
    AssessmentTemplate("itm-10", "ratio", 1.6, 1.2, 0.25, "Express the comparison as a ratio."),
    AssessmentTemplate("itm-11", "graph", 1.4, 2.0, 0.20, "Read the value from the graph."),
    AssessmentTemplate("itm-12", "angle", 1.2, -0.8, 0.25, "Name the type of angle shown."),
)


def synthesize_assessment(content, bank: list[AssessmentTemplate] | None = None) -> list[ItemParams]:
    """Build an item pool from content: one item per matched template."""
    bank = list(bank) if bank is not None else list(DEMO_BANK)
    if not bank:
        raise NoTemplatesMatched("template bank is empty")
    text = (content if isinstance(content, str) else content.text).lower()
    pool = [
        ItemParams(
            item_id=t.template_id,
            a=t.a,
            b=t.b,
            c=t.c,
            prompt_ref=t.template_id,
            prompt=t.prompt,
        )
        for t in bank
        if t.keyword.lower() in text
    ]
    if not pool:
        raise NoTemplatesMatched("no template keyword occurs in the content")
    return pool


def load_template_bank(path: str | Path) -> list[AssessmentTemplate]:
    """Parse ``template_id keyword a b c prompt...`` lines."""
    bank = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(maxsplit=5)
        if len(parts) < 6:
            raise ValueError(f"{path}:{lineno}: expected 'template_id keyword a b c prompt'")
        template_id, keyword, a, b, c, prompt = parts
        bank.append(AssessmentTemplate(template_id, keyword, float(a), float(b), float(c), prompt))
    if not bank:
        raise ValueError(f"{path}: empty template bank")
    return bank
