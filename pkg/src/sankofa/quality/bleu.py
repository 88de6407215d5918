"""Corpus-level BLEU with clipped n-gram precisions and brevity penalty.

Score = BP * exp(sum_n (1/N) * log p_n), where p_n are modified n-gram
precisions pooled over the whole corpus and BP = min(1, exp(1 - r/c))
with r the sum of per-segment closest-length reference lengths and c the
total candidate length.

Tokenization is Unicode NFC normalization, lowercasing, then whitespace
splitting, so the metric is script-agnostic (Latin, Ge'ez, ...).

Smoothing rules for an order n with pooled candidate count ``count_n``:

* ``count_n == 0`` (corpus shorter than n tokens): p_n is treated as 1,
  contributing nothing — under either smoothing mode.
* matches == 0 with AddOne smoothing: p_n = 1 / (count_n + 1).
* matches == 0 with no smoothing: the score is 0.0 and the result is
  flagged ``zero_ngram``.
"""

import math
import unicodedata
from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from sankofa import SankofaError


class EmptySegmentList(SankofaError):
    pass


class Smoothing(Enum):
    NONE = "none"
    ADD_ONE = "add_one"


@dataclass
class BleuConfig:
    max_n: int = 4
    smoothing: Smoothing = Smoothing.ADD_ONE

    def __post_init__(self):
        if not 1 <= self.max_n <= 4:
            raise ValueError(f"max_n must be in 1..4, got {self.max_n}")


@dataclass
class BleuResult:
    score: float
    precisions: list[float]
    brevity_penalty: float
    candidate_len: int
    reference_len: int
    zero_ngram: bool = False
    match_counts: list[int] = field(default_factory=list)
    total_counts: list[int] = field(default_factory=list)


def tokenize(text: str) -> list[str]:
    return unicodedata.normalize("NFC", text).lower().split()


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def _closest_ref_len(cand_len: int, ref_lens: Sequence[int]) -> int:
    # ties go to the shorter reference
    return min(ref_lens, key=lambda r: (abs(r - cand_len), r))


def bleu(
    candidates: Sequence[str],
    references: Sequence[Sequence[str]],
    config: BleuConfig | None = None,
) -> BleuResult:
    """Score a corpus of candidate segments against per-segment references."""
    config = config or BleuConfig()
    if len(candidates) == 0:
        raise EmptySegmentList("no candidate segments")
    if len(candidates) != len(references):
        raise ValueError(
            f"candidate/reference count mismatch: {len(candidates)} vs {len(references)}"
        )
    for refs in references:
        if len(refs) == 0:
            raise ValueError("every segment needs at least one reference")

    n_orders = config.max_n
    matches = [0] * n_orders
    totals = [0] * n_orders
    cand_len = 0
    ref_len = 0

    for cand_text, ref_texts in zip(candidates, references):
        cand = tokenize(cand_text)
        refs = [tokenize(r) for r in ref_texts]
        cand_len += len(cand)
        ref_len += _closest_ref_len(len(cand), [len(r) for r in refs])
        for n in range(1, n_orders + 1):
            cand_counts = _ngrams(cand, n)
            if not cand_counts:
                continue
            max_ref_counts: Counter = Counter()
            for ref in refs:
                for gram, count in _ngrams(ref, n).items():
                    if count > max_ref_counts[gram]:
                        max_ref_counts[gram] = count
            totals[n - 1] += sum(cand_counts.values())
            matches[n - 1] += sum(
                min(count, max_ref_counts[gram]) for gram, count in cand_counts.items()
            )

    precisions: list[float] = []
    zero_ngram = False
    for n in range(n_orders):
        if totals[n] == 0:
            precisions.append(1.0)
        elif matches[n] == 0:
            if config.smoothing is Smoothing.ADD_ONE:
                precisions.append(1.0 / (totals[n] + 1))
            else:
                precisions.append(0.0)
                zero_ngram = True
        else:
            precisions.append(matches[n] / totals[n])

    if cand_len == 0:
        return BleuResult(0.0, precisions, 0.0, 0, ref_len, True, matches, totals)

    bp = min(1.0, math.exp(1.0 - ref_len / cand_len))
    if zero_ngram:
        score = 0.0
    else:
        log_avg = sum(math.log(p) for p in precisions) / n_orders
        score = bp * math.exp(log_avg)
    return BleuResult(score, precisions, bp, cand_len, ref_len, zero_ngram, matches, totals)
