"""3PL probability and information against scalar and curvature oracles."""

import math
import random

import numpy as np
import pytest

from sankofa.assessment.irt import ItemParams, item_information, prob_correct


def scalar_prob_oracle(theta, a, b, c):
    # independent evaluation path: mpmath-free, explicit exponent algebra
    odds = math.exp(a * (theta - b))
    return c + (1.0 - c) * odds / (1.0 + odds)


def test_logistic_symmetry():
    assert prob_correct(0.0, ItemParams("i", 1.0, 0.0, 0.0)) == pytest.approx(0.5)


def test_guessing_midpoint():
    for a in (0.5, 1.0, 2.3):
        p = prob_correct(0.7, ItemParams("i", a, 0.7, 0.2))
        assert p == pytest.approx(0.6)  # c + (1 - c) / 2


def test_scalar_oracle_value():
    p = prob_correct(1.0, ItemParams("i", 1.5, 0.5, 0.2))
    assert p == pytest.approx(0.7433, abs=1e-4)
    assert p == pytest.approx(scalar_prob_oracle(1.0, 1.5, 0.5, 0.2), abs=1e-12)


def test_information_peak_c_zero():
    assert item_information(0.0, ItemParams("i", 2.0, 0.0, 0.0)) == pytest.approx(1.0)


def test_information_tails_vanish():
    item = ItemParams("i", 1.0, 0.0, 0.0)
    assert item_information(10.0, item) < 1e-3
    assert item_information(-10.0, item) < 1e-3


def test_information_scalar_oracle():
    # theta = b: sigma = 1/2, P = 0.6, I = a^2 (Q/P)((P-c)/(1-c))^2
    got = item_information(0.5, ItemParams("i", 1.5, 0.5, 0.2))
    p = scalar_prob_oracle(0.5, 1.5, 0.5, 0.2)
    want = 1.5**2 * ((1 - p) / p) * ((p - 0.2) / 0.8) ** 2
    assert got == pytest.approx(want, abs=1e-6)
    assert got == pytest.approx(0.375, abs=1e-9)


def test_information_reduces_to_a2pq_for_c_zero():
    rng = random.Random(5)
    for _ in range(200):
        item = ItemParams("i", rng.uniform(0.3, 2.5), rng.uniform(-3, 3), 0.0)
        theta = rng.uniform(-4, 4)
        p = prob_correct(theta, item)
        assert item_information(theta, item) == pytest.approx(
            item.a**2 * p * (1 - p), abs=1e-9
        )


def log_likelihood(theta, u, item):
    p = scalar_prob_oracle(theta, item.a, item.b, item.c)
    return math.log(p) if u else math.log(1.0 - p)


def test_information_matches_expected_curvature():
    # I(theta) == -E[d2 logL / dtheta2] by central differences, step 1e-4
    rng = random.Random(9)
    h = 1e-4
    for _ in range(100):
        item = ItemParams("i", rng.uniform(0.5, 2.0), rng.uniform(-2, 2), rng.uniform(0, 0.3))
        theta = rng.uniform(-2.5, 2.5)
        p = scalar_prob_oracle(theta, item.a, item.b, item.c)
        expected_curvature = 0.0
        for u, weight in ((True, p), (False, 1.0 - p)):
            second = (
                log_likelihood(theta + h, u, item)
                - 2.0 * log_likelihood(theta, u, item)
                + log_likelihood(theta - h, u, item)
            ) / h**2
            expected_curvature += weight * second
        assert item_information(theta, item) == pytest.approx(-expected_curvature, abs=1e-4)


def test_monotone_in_theta():
    rng = random.Random(11)
    grid = np.linspace(-4, 4, 41)
    for _ in range(100):
        item = ItemParams("i", rng.uniform(0.2, 3.0), rng.uniform(-3, 3), rng.uniform(0, 0.5))
        probs = prob_correct(grid, item)
        assert np.all(np.diff(probs) > 0)


def test_vectorized_matches_scalar():
    item = ItemParams("i", 1.3, -0.4, 0.15)
    grid = np.linspace(-4, 4, 17)
    vec = prob_correct(grid, item)
    for theta, p in zip(grid, vec):
        assert p == pytest.approx(prob_correct(float(theta), item))


def test_invalid_params_rejected():
    with pytest.raises(ValueError):
        ItemParams("i", 0.0, 0.0, 0.0)
    with pytest.raises(ValueError):
        ItemParams("i", 1.0, 0.0, 1.0)
