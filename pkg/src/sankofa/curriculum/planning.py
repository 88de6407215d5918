"""Value iteration, greedy policy extraction, pathway rollout.

Value iteration runs the Bellman optimality backup
V(s) <- max_a [R(s, a) + gamma * sum_s' P(s'|s, a) V(s')] to a sup-norm
residual below tolerance.  Policies break action ties toward the lowest
action index; pathway rollouts resolve each stochastic transition to the
maximum-likelihood successor (ties to the lowest state index), so
planning output is deterministic on-device.
"""

from dataclasses import dataclass

import numpy as np

from sankofa import SankofaError
from sankofa.curriculum.mdp import MDPModel


class UnreachableStart(SankofaError):
    pass


@dataclass
class ValueFunction:
    values: dict
    vector: np.ndarray
    iterations: int
    residual: float
    converged: bool


@dataclass
class Policy:
    actions: dict  # state -> action
    indices: np.ndarray  # per-state action index


@dataclass
class LearningPathway:
    steps: list  # (state, action) pairs, goal state excluded


def _q_values(mdp: MDPModel, vector: np.ndarray) -> np.ndarray:
    return mdp.reward + mdp.discount * np.einsum("sat,t->sa", mdp.transition, vector)


def bellman_sweep(mdp: MDPModel, vector: np.ndarray) -> tuple[np.ndarray, float]:
    """One optimality backup; returns the new vector and sup-norm residual."""
    updated = _q_values(mdp, vector).max(axis=1)
    return updated, float(np.abs(updated - vector).max())


def value_iterate(mdp: MDPModel, tolerance: float = 1e-6, max_iters: int = 10_000) -> ValueFunction:
    if tolerance <= 0:
        raise ValueError("tolerance must be > 0")
    vector = np.zeros(len(mdp.states))
    residual = float("inf")
    converged = False
    iterations = 0
    for iterations in range(1, max_iters + 1):
        vector, residual = bellman_sweep(mdp, vector)
        if residual < tolerance:
            converged = True
            break
    return ValueFunction(
        values={state: float(v) for state, v in zip(mdp.states, vector)},
        vector=vector,
        iterations=iterations,
        residual=residual,
        converged=converged,
    )


def extract_policy(mdp: MDPModel, value: ValueFunction) -> Policy:
    q = _q_values(mdp, value.vector)
    indices = q.argmax(axis=1)  # argmax keeps the first (lowest) index on ties
    return Policy(
        actions={state: mdp.actions[i] for state, i in zip(mdp.states, indices)},
        indices=indices,
    )


def plan_pathway(mdp: MDPModel, policy: Policy, start_state, horizon: int) -> LearningPathway:
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    if start_state not in mdp.states:
        raise UnreachableStart(f"start state {start_state!r} not in model")
    goal = None if mdp.goal_index is None else mdp.states[mdp.goal_index]
    steps = []
    state = start_state
    while state != goal and len(steps) < horizon:
        s = mdp.state_index(state)
        a = int(policy.indices[s])
        steps.append((state, mdp.actions[a]))
        state = mdp.states[int(np.argmax(mdp.transition[s, a]))]
    return LearningPathway(steps=steps)


def render_pathway(pathway: LearningPathway) -> str:
    """Line-delimited ``topic level action`` records."""
    lines = []
    for (topic, level), action in pathway.steps:
        name = action.value if hasattr(action, "value") else str(action)
        lines.append(f"{topic} {level} {name}")
    return "\n".join(lines) + ("\n" if lines else "")
