"""Three-parameter-logistic item model.

P(theta) = c + (1 - c) / (1 + exp(-a * (theta - b)))

Fisher information:

I(theta) = a^2 * (Q / P) * ((P - c) / (1 - c))^2,  Q = 1 - P

which reduces to a^2 * P * Q for c = 0.  Both functions accept a scalar
theta or an ndarray of thetas.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class ItemParams:
    item_id: str
    a: float  # discrimination
    b: float  # difficulty
    c: float = 0.0  # guessing probability
    prompt_ref: str = "-"
    prompt: str = ""

    def __post_init__(self):
        if self.a <= 0:
            raise ValueError(f"item {self.item_id}: discrimination must be > 0")
        if not 0.0 <= self.c < 1.0:
            raise ValueError(f"item {self.item_id}: guessing must be in [0, 1)")


def prob_correct(theta, item: ItemParams):
    z = item.a * (np.asarray(theta, dtype=float) - item.b)
    p = item.c + (1.0 - item.c) / (1.0 + np.exp(-z))
    return float(p) if p.ndim == 0 else p


def item_information(theta, item: ItemParams):
    p = np.asarray(prob_correct(theta, item))
    q = 1.0 - p
    info = item.a**2 * (q / p) * ((p - item.c) / (1.0 - item.c)) ** 2
    return float(info) if info.ndim == 0 else info
