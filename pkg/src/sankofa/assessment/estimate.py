"""Ability estimation from dichotomous responses.

MLE runs Fisher scoring (Newton on the score with expected information)
with a bisection fallback, converging to |d logL / d theta| < 1e-6 or
clamping to the [-4, 4] bounds.  EAP integrates a standard normal prior
over a 61-point grid on [-4, 4]; its standard error is the posterior
standard deviation, which stays finite for all-correct/all-incorrect
patterns, so sessions default to EAP.
"""

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from sankofa import SankofaError
from sankofa.assessment.irt import ItemParams, item_information, prob_correct

THETA_MIN = -4.0
THETA_MAX = 4.0
GRID_POINTS = 61
SCORE_TOLERANCE = 1e-6


class EmptyResponseSet(SankofaError):
    pass


class EstimationMethod(Enum):
    MLE = "mle"
    EAP = "eap"


class AbilityFlag(Enum):
    CLAMPED = "clamped"
    ALL_CORRECT = "all_correct"
    ALL_INCORRECT = "all_incorrect"


@dataclass
class AbilityEstimate:
    theta: float
    standard_error: float
    method: EstimationMethod
    flags: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not THETA_MIN <= self.theta <= THETA_MAX:
            raise ValueError(f"theta {self.theta} outside clamp bounds")


def _score(theta: float, responses, items) -> float:
    """d logL / d theta at theta."""
    total = 0.0
    for u, item in zip(responses, items):
        p = prob_correct(theta, item)
        dp = item.a * (p - item.c) * (1.0 - p) / (1.0 - item.c)
        total += dp * ((1.0 if u else 0.0) - p) / (p * (1.0 - p))
    return total


def _total_information(theta: float, items) -> float:
    return sum(item_information(theta, item) for item in items)


def _mle(responses, items) -> AbilityEstimate:
    flags = set()
    if all(responses):
        flags = {AbilityFlag.ALL_CORRECT, AbilityFlag.CLAMPED}
        theta = THETA_MAX
    elif not any(responses):
        flags = {AbilityFlag.ALL_INCORRECT, AbilityFlag.CLAMPED}
        theta = THETA_MIN
    else:
        theta = 0.0
        converged = False
        for _ in range(100):
            score = _score(theta, responses, items)
            if abs(score) < SCORE_TOLERANCE:
                converged = True
                break
            info = _total_information(theta, items)
            if info <= 0:
                break
            theta = min(THETA_MAX, max(THETA_MIN, theta + score / info))
        if not converged:
            theta, clamped = _bisect_score(responses, items)
            if clamped:
                flags = {AbilityFlag.CLAMPED}
    total_info = _total_information(theta, items)
    se = 1.0 / math.sqrt(total_info) if total_info > 0 else math.inf
    return AbilityEstimate(theta, se, EstimationMethod.MLE, frozenset(flags))


def _bisect_score(responses, items) -> tuple[float, bool]:
    lo, hi = THETA_MIN, THETA_MAX
    s_lo = _score(lo, responses, items)
    s_hi = _score(hi, responses, items)
    if s_lo <= 0:  # likelihood decreasing over the whole range
        return lo, True
    if s_hi >= 0:  # increasing over the whole range
        return hi, True
    for _ in range(200):
        mid = (lo + hi) / 2
        s_mid = _score(mid, responses, items)
        if abs(s_mid) < SCORE_TOLERANCE:
            return mid, False
        if s_mid > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2, False


def _eap(responses, items) -> AbilityEstimate:
    grid = np.linspace(THETA_MIN, THETA_MAX, GRID_POINTS)
    log_weights = -0.5 * grid**2  # standard normal prior, constant dropped
    for u, item in zip(responses, items):
        p = prob_correct(grid, item)
        log_weights += np.log(p if u else 1.0 - p)
    weights = np.exp(log_weights - log_weights.max())
    weights /= weights.sum()
    mean = float(np.dot(grid, weights))
    var = float(np.dot((grid - mean) ** 2, weights))
    return AbilityEstimate(mean, math.sqrt(var), EstimationMethod.EAP)


def estimate_ability(
    responses: list[bool],
    items: list[ItemParams],
    method: EstimationMethod = EstimationMethod.EAP,
) -> AbilityEstimate:
    if len(responses) == 0:
        raise EmptyResponseSet("need at least one response")
    if len(responses) != len(items):
        raise ValueError(f"{len(responses)} responses for {len(items)} items")
    if method is EstimationMethod.MLE:
        return _mle(responses, items)
    return _eap(responses, items)
