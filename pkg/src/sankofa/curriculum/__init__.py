"""Curriculum planning: finite MDP over (topic, mastery) states."""

from sankofa.curriculum.graph import (
    CurriculumGraph,
    CyclicPrerequisites,
    EmptyCurriculum,
    default_curriculum,
    load_curriculum_file,
)
from sankofa.curriculum.mdp import GOAL_STATE, CurriculumAction, MDPModel, ProgressionConfig, build_mdp
from sankofa.curriculum.planning import (
    LearningPathway,
    Policy,
    UnreachableStart,
    ValueFunction,
    bellman_sweep,
    extract_policy,
    plan_pathway,
    render_pathway,
    value_iterate,
)

__all__ = [
    "CurriculumGraph",
    "CyclicPrerequisites",
    "EmptyCurriculum",
    "default_curriculum",
    "load_curriculum_file",
    "GOAL_STATE",
    "CurriculumAction",
    "MDPModel",
    "ProgressionConfig",
    "build_mdp",
    "LearningPathway",
    "Policy",
    "UnreachableStart",
    "ValueFunction",
    "bellman_sweep",
    "extract_policy",
    "plan_pathway",
    "render_pathway",
    "value_iterate",
]
