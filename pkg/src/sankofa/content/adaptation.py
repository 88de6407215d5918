"""Rule-based linguistic adaptation: extractive summary + glossary terms.

The summary takes the first sentence of each paragraph (blank-line
separated), capped at a configurable sentence count, then applies
glossary substitutions.  Deterministic for fixed inputs; degenerate
inputs produce flags, never failures.
"""

import re
from dataclasses import dataclass, field
from enum import Enum

# a sentence this long means splitting found no boundary; flag it
MAX_SENTENCE_CHARS = 400


class AdaptationFlag(Enum):
    UNTRANSLATED_TERM = "untranslated_term"
    LENGTH_ANOMALY = "length_anomaly"
    EMPTY_INPUT = "empty_input"


@dataclass(frozen=True)
class LanguageProfile:
    language: str
    glossary: tuple[tuple[str, str], ...] = ()  # (source term, localized term)


@dataclass
class AdaptationResult:
    summary: str
    localized_terms: list[tuple[str, str]] = field(default_factory=list)
    flags: list[AdaptationFlag] = field(default_factory=list)


_SENTENCE_END = re.compile(r"(?<=[.!?])\s+")


def _first_sentence(paragraph: str) -> str:
    parts = _SENTENCE_END.split(paragraph.strip(), maxsplit=1)
    return parts[0].strip()


def adapt(content, profile: LanguageProfile, max_sentences: int = 5) -> AdaptationResult:
    """Summarize and localize generated content for a language profile."""
    text = content if isinstance(content, str) else content.text
    if not text.strip():
        return AdaptationResult(summary="", flags=[AdaptationFlag.EMPTY_INPUT])

    paragraphs = [p for p in re.split(r"\n\s*\n", text) if p.strip()]
    sentences = [_first_sentence(p) for p in paragraphs][:max_sentences]
    summary = " ".join(sentences)

    flags = []
    if any(len(s) > MAX_SENTENCE_CHARS for s in sentences):
        flags.append(AdaptationFlag.LENGTH_ANOMALY)

    lowered = text.lower()
    hits = [(src, loc) for src, loc in profile.glossary if src.lower() in lowered]
    for src, localized in hits:
        if not localized:
            if AdaptationFlag.UNTRANSLATED_TERM not in flags:
                flags.append(AdaptationFlag.UNTRANSLATED_TERM)
            continue
        summary = re.sub(re.escape(src), localized, summary, flags=re.IGNORECASE)

    return AdaptationResult(summary=summary, localized_terms=hits, flags=flags)
