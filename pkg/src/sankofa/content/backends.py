"""Backend descriptors, the registry, and the deterministic mock backend.

The mock replays a script of ``(delay_ms, token)`` steps against any
clock, so timing tests run on a virtual clock with exact arrivals.
Script files hold one ``<delay_ms> <token-text>`` step per line; the
token text is everything after the first space, verbatim, so tokens can
carry their own spacing.
"""

import threading
from dataclasses import dataclass, field
from pathlib import Path

from sankofa import SankofaError
from sankofa.clock import MonotonicClock


class DuplicateName(SankofaError):
    pass


class BackendUnavailable(SankofaError):
    pass


@dataclass(frozen=True)
class ModelBackendDescriptor:
    name: str
    supported_languages: frozenset[str]
    context_window: int = 2048
    endpoint: str | None = None

    def __post_init__(self):
        if not self.supported_languages:
            raise ValueError(f"backend {self.name!r} must support at least one language")

    def supports_language(self, language: str) -> bool:
        return language in self.supported_languages


class BackendRegistry:
    """Name-unique backend registry; reads are lock-free snapshots."""

    def __init__(self):
        self._backends: dict[str, object] = {}
        self._lock = threading.Lock()

    def register(self, backend) -> None:
        name = backend.descriptor.name
        with self._lock:
            if name in self._backends:
                raise DuplicateName(f"backend {name!r} already registered")
            self._backends[name] = backend

    def get(self, name: str):
        backend = self._backends.get(name)
        if backend is None:
            raise KeyError(f"no backend named {name!r}")
        return backend

    def names(self) -> list[str]:
        return sorted(self._backends)

    def backends_for_language(self, language: str) -> list[str]:
        return sorted(
            name
            for name, b in self._backends.items()
            if b.descriptor.supports_language(language)
        )

    def languages(self) -> set[str]:
        langs: set[str] = set()
        for backend in self._backends.values():
            langs |= backend.descriptor.supported_languages
        return langs


DEFAULT_MOCK_LANGUAGES = frozenset({"sw", "yo", "zu", "am", "ha", "ig", "xh", "en"})

# Default lesson script: token text deliberately hits several assessment
# template keywords (fraction, compare, add, share, practice).
DEFAULT_MOCK_SCRIPT: list[tuple[float, str]] = [
    (12.0, "A fraction "),
    (8.0, "names part "),
    (8.0, "of a whole. "),
    (8.0, "Learners compare "),
    (8.0, "two fractions "),
    (8.0, "with the same "),
    (8.0, "denominator. "),
    (8.0, "Then they add "),
    (8.0, "simple fractions "),
    (8.0, "step by step. "),
    (8.0, "Practice: share "),
    (8.0, "three oranges "),
    (8.0, "among four "),
    (8.0, "learners fairly."),
]


@dataclass
class MockBackend:
    """In-process scripted backend; failure points are configurable."""

    descriptor: ModelBackendDescriptor
    script: list[tuple[float, str]] = field(default_factory=lambda: list(DEFAULT_MOCK_SCRIPT))
    clock: object = field(default_factory=MonotonicClock)
    fail_after: int | None = None  # raise after yielding this many tokens
    unavailable: bool = False

    def stream_tokens(self, request):
        if self.unavailable:
            raise BackendUnavailable(f"backend {self.descriptor.name!r} is unavailable")
        for i, (delay_ms, text) in enumerate(self.script):
            if self.fail_after is not None and i >= self.fail_after:
                raise BackendUnavailable(
                    f"backend {self.descriptor.name!r} failed after {i} tokens"
                )
            self.clock.sleep_ms(delay_ms)
            yield text


def mock_backend(
    name: str = "mock",
    languages: frozenset[str] = DEFAULT_MOCK_LANGUAGES,
    script: list[tuple[float, str]] | None = None,
    clock=None,
    **kwargs,
) -> MockBackend:
    return MockBackend(
        descriptor=ModelBackendDescriptor(name=name, supported_languages=frozenset(languages)),
        script=list(script) if script is not None else list(DEFAULT_MOCK_SCRIPT),
        clock=clock or MonotonicClock(),
        **kwargs,
    )


def load_token_script(path: str | Path) -> list[tuple[float, str]]:
    """Parse mock script lines ``<delay_ms> <token-text>``."""
    script = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").split("\n"), 1):
        if not raw or raw.startswith("#"):
            continue
        delay, sep, token = raw.partition(" ")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected '<delay_ms> <token-text>'")
        script.append((float(delay), token))
    return script
