"""Reward-weighted model selection: an epsilon-greedy bandit per language.

Scores live in [0, 1] and update by exponential smoothing:
score <- (1 - alpha) * score + alpha * reward.  Selection is greedy with
probability 1 - epsilon (ties to the lexicographically smallest name)
and uniform over supporting backends otherwise, driven by a seeded
generator so choice sequences replay bit-exactly.
"""

import random
from dataclasses import dataclass, field

from sankofa import SankofaError


class NoBackendForLanguage(SankofaError):
    pass


class RewardOutOfRange(SankofaError):
    pass


@dataclass
class SelectionTable:
    scores: dict[tuple[str, str], float] = field(default_factory=dict)
    epsilon: float = 0.1
    alpha: float = 0.1
    initial_score: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError("epsilon must be in [0, 1]")
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError("alpha must be in (0, 1]")

    def score(self, language: str, model: str) -> float:
        return self.scores.get((language, model), self.initial_score)


def select_model(language: str, candidates: list[str], table: SelectionTable, rng: random.Random) -> str:
    if not candidates:
        raise NoBackendForLanguage(f"no backend supports language {language!r}")
    ordered = sorted(candidates)
    draw = rng.random()
    if draw < table.epsilon:
        return ordered[rng.randrange(len(ordered))]
    # max() keeps the first maximum, i.e. the lexicographically smallest name
    return max(ordered, key=lambda name: table.score(language, name))


def update_selection(table: SelectionTable, language: str, model: str, reward: float) -> SelectionTable:
    if not 0.0 <= reward <= 1.0:
        raise RewardOutOfRange(f"reward {reward} outside [0, 1]")
    old = table.score(language, model)
    table.scores[(language, model)] = (1.0 - table.alpha) * old + table.alpha * reward
    return table


class ModelSelector:
    """Registry-aware convenience wrapper owning the table and the RNG."""

    def __init__(self, registry, table: SelectionTable | None = None, seed: int = 0):
        self.registry = registry
        self.table = table or SelectionTable()
        self.rng = random.Random(seed)

    def select(self, language: str) -> str:
        candidates = self.registry.backends_for_language(language)
        return select_model(language, candidates, self.table, self.rng)

    def reward(self, language: str, model: str, value: float) -> float:
        update_selection(self.table, language, model, value)
        return self.table.score(language, model)
