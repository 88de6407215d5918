"""Content generation and linguistic adaptation over pluggable backends."""

from sankofa.content.generate import (
    DeadlineExceeded,
    FinishReason,
    GeneratedContent,
    GenerationRequest,
    GenerationStream,
    TokenEvent,
    generate_stream,
)
from sankofa.content.backends import (
    BackendUnavailable,
    BackendRegistry,
    DuplicateName,
    MockBackend,
    ModelBackendDescriptor,
    load_token_script,
)
from sankofa.content.selection import (
    ModelSelector,
    NoBackendForLanguage,
    RewardOutOfRange,
    SelectionTable,
    select_model,
    update_selection,
)
from sankofa.content.adaptation import AdaptationFlag, AdaptationResult, LanguageProfile, adapt
from sankofa.content.corpus import CorpusPair, LineCountMismatch, UnreadableFile, load_corpus
from sankofa.content.stream_client import SocketBackend

__all__ = [
    "DeadlineExceeded",
    "FinishReason",
    "GeneratedContent",
    "GenerationRequest",
    "GenerationStream",
    "TokenEvent",
    "generate_stream",
    "BackendUnavailable",
    "BackendRegistry",
    "DuplicateName",
    "MockBackend",
    "ModelBackendDescriptor",
    "load_token_script",
    "ModelSelector",
    "NoBackendForLanguage",
    "RewardOutOfRange",
    "SelectionTable",
    "select_model",
    "update_selection",
    "AdaptationFlag",
    "AdaptationResult",
    "LanguageProfile",
    "adapt",
    "CorpusPair",
    "LineCountMismatch",
    "UnreadableFile",
    "load_corpus",
    "SocketBackend",
]
