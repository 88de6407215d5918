"""Adaptive assessment: 3PL IRT, ability estimation, CAT sessions."""

from sankofa.assessment.irt import ItemParams, item_information, prob_correct
from sankofa.assessment.estimate import (
    AbilityEstimate,
    AbilityFlag,
    EmptyResponseSet,
    EstimationMethod,
    estimate_ability,
)
from sankofa.assessment.session import (
    AdaptiveSession,
    NoPendingItem,
    PoolExhausted,
    SessionStopped,
    StopRule,
    create_session,
    load_item_pool,
    render_item_pool,
    select_next_item,
    session_transcript,
    step_session,
)
from sankofa.assessment.synthesis import (
    AssessmentTemplate,
    DEMO_BANK,
    NoTemplatesMatched,
    load_template_bank,
    synthesize_assessment,
)

__all__ = [
    "ItemParams",
    "item_information",
    "prob_correct",
    "AbilityEstimate",
    "AbilityFlag",
    "EmptyResponseSet",
    "EstimationMethod",
    "estimate_ability",
    "AdaptiveSession",
    "NoPendingItem",
    "PoolExhausted",
    "SessionStopped",
    "StopRule",
    "create_session",
    "load_item_pool",
    "render_item_pool",
    "select_next_item",
    "session_transcript",
    "step_session",
    "AssessmentTemplate",
    "DEMO_BANK",
    "NoTemplatesMatched",
    "load_template_bank",
    "synthesize_assessment",
]
