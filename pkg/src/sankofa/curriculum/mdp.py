"""Finite MDP construction from a curriculum graph.

States are (topic, mastery-level) tuples for every goal-relevant topic,
levels 0 through the topic's exit level, plus one absorbing goal state.
Topics advance in a fixed topological order; each activity action moves
the learner up one level with a per-action probability and otherwise
leaves the state unchanged.  Rewards are expected immediate rewards: a
small per-step cost plus the goal bonus weighted by the probability of
entering the goal.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from sankofa.curriculum.graph import CurriculumGraph

GOAL_STATE = ("goal", 0)

ROW_SUM_TOLERANCE = 1e-9


class CurriculumAction(Enum):
    LESSON = "lesson"
    EXERCISE = "exercise"
    ASSESSMENT = "assessment"
    REVIEW = "review"


@dataclass
class ProgressionConfig:
    advance_probs: dict[CurriculumAction, float] = field(
        default_factory=lambda: {
            CurriculumAction.LESSON: 0.6,
            CurriculumAction.EXERCISE: 0.7,
            CurriculumAction.ASSESSMENT: 0.5,
            CurriculumAction.REVIEW: 0.4,
        }
    )
    step_cost: float = -0.01
    goal_reward: float = 1.0
    discount: float = 0.95


@dataclass
class MDPModel:
    """Tabular MDP: transition[s, a, s'] and reward[s, a] over state labels.

    The discount normally lies strictly inside (0, 1); gamma = 0 is
    accepted as the degenerate myopic limit.
    """

    states: list
    actions: list
    transition: np.ndarray  # (S, A, S), row-stochastic over s'
    reward: np.ndarray  # (S, A)
    discount: float
    goal_index: int | None = None

    def __post_init__(self):
        n_states, n_actions = len(self.states), len(self.actions)
        if self.transition.shape != (n_states, n_actions, n_states):
            raise ValueError(f"transition shape {self.transition.shape} mismatch")
        if self.reward.shape != (n_states, n_actions):
            raise ValueError(f"reward shape {self.reward.shape} mismatch")
        if not 0.0 <= self.discount < 1.0:
            raise ValueError(f"discount {self.discount} outside [0, 1)")
        row_sums = self.transition.sum(axis=2)
        if not np.allclose(row_sums, 1.0, atol=ROW_SUM_TOLERANCE, rtol=0.0):
            raise ValueError("transition rows must sum to 1")
        if self.goal_index is not None:
            goal_rows = self.transition[self.goal_index, :, :]
            if not np.allclose(goal_rows[:, self.goal_index], 1.0, atol=ROW_SUM_TOLERANCE):
                raise ValueError("goal state must be absorbing under all actions")

    def state_index(self, state) -> int:
        return self.states.index(state)


def build_mdp(curriculum: CurriculumGraph, config: ProgressionConfig | None = None) -> MDPModel:
    config = config or ProgressionConfig()
    order = curriculum.relevant_topics()

    goal_levels: dict[str, int] = {}
    for topic, level in curriculum.goals:
        goal_levels[topic] = max(level, goal_levels.get(topic, 0))
    has_dependent = {
        t: any(before == t and after in order for before, after in curriculum.prerequisites)
        for t in order
    }
    top = curriculum.mastery_levels - 1
    exit_level = {
        t: top if has_dependent[t] else goal_levels.get(t, top) for t in order
    }

    states: list = []
    for topic in order:
        states.extend((topic, level) for level in range(exit_level[topic] + 1))
    states.append(GOAL_STATE)
    index = {s: i for i, s in enumerate(states)}
    goal_index = index[GOAL_STATE]

    def successor(state):
        topic, level = state
        if level < exit_level[topic]:
            return (topic, level + 1)
        pos = order.index(topic)
        if pos + 1 < len(order):
            return (order[pos + 1], 0)
        return GOAL_STATE

    actions = list(CurriculumAction)
    n = len(states)
    transition = np.zeros((n, len(actions), n))
    reward = np.zeros((n, len(actions)))
    for state in states:
        s = index[state]
        if state == GOAL_STATE:
            transition[s, :, s] = 1.0
            continue
        nxt = index[successor(state)]
        for a, action in enumerate(actions):
            p = config.advance_probs[action]
            transition[s, a, nxt] += p
            transition[s, a, s] += 1.0 - p
            reward[s, a] = config.step_cost + (config.goal_reward * p if nxt == goal_index else 0.0)

    return MDPModel(
        states=states,
        actions=actions,
        transition=transition,
        reward=reward,
        discount=config.discount,
        goal_index=goal_index,
    )
