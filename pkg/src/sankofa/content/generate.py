"""Streaming generation with per-token arrival timestamps.

``generate_stream`` wraps any backend's raw token iterator and stamps
each token with the monotonic clock at arrival, before any buffering.
Truncation (max_tokens), deadlines and mid-stream backend failures all
terminate the stream in-band: partial events are retained and the final
``GeneratedContent`` carries ``finish_reason`` plus an error string.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, Iterator

from sankofa import SankofaError
from sankofa.clock import MonotonicClock


class DeadlineExceeded(SankofaError):
    pass


class FinishReason(Enum):
    STOP = "stop"
    MAX_TOKENS = "max_tokens"
    ERROR = "error"


@dataclass(frozen=True)
class GenerationRequest:
    language: str
    subject: str = ""
    grade: int = 1
    max_tokens: int = 256
    seed: int = 0
    deadline_ms: float | None = None
    template_id: str = "lesson"

    def __post_init__(self):
        if self.max_tokens < 1:
            raise ValueError("max_tokens must be >= 1")
        if not self.language:
            raise ValueError("language must be non-empty")


@dataclass(frozen=True)
class TokenEvent:
    index: int
    text: str
    arrived_at: int  # monotonic ns


@dataclass
class GeneratedContent:
    text: str
    events: list[TokenEvent]
    model_name: str
    finish_reason: FinishReason
    request_echo: GenerationRequest
    error: str | None = None


@dataclass
class GenerationStream:
    """Single-consumer stream of TokenEvents ending in a GeneratedContent.

    Iterate to drain; ``content`` is available once iteration finishes.
    Taps registered with ``add_tap`` observe each event at arrival time,
    in order, before the consumer sees it.
    """

    request: GenerationRequest
    model_name: str
    request_sent_at: int
    events: list[TokenEvent] = field(default_factory=list)
    completed_at: int | None = None
    _source: Iterator[str] | None = None
    _clock: object = None
    _content: GeneratedContent | None = None
    _taps: list[Callable[[TokenEvent], None]] = field(default_factory=list)

    def add_tap(self, tap: Callable[[TokenEvent], None]) -> None:
        self._taps.append(tap)

    @property
    def content(self) -> GeneratedContent:
        if self._content is None:
            raise RuntimeError("stream not yet drained")
        return self._content

    def _finish(self, reason: FinishReason, error: str | None = None) -> None:
        self.completed_at = self._clock.now_ns()
        self._content = GeneratedContent(
            text="".join(e.text for e in self.events),
            events=self.events,
            model_name=self.model_name,
            finish_reason=reason,
            request_echo=self.request,
            error=error,
        )

    def __iter__(self):
        deadline_ns = None
        if self.request.deadline_ms is not None:
            deadline_ns = self.request_sent_at + int(self.request.deadline_ms * 1_000_000)
        index = 0
        while True:
            try:
                text = next(self._source)
            except StopIteration:
                self._finish(FinishReason.STOP)
                return
            except Exception as exc:
                if index == 0:
                    raise
                self._finish(FinishReason.ERROR, error=str(exc) or type(exc).__name__)
                return
            arrived_at = self._clock.now_ns()
            if deadline_ns is not None and arrived_at > deadline_ns:
                # overdue token is dropped; everything on time is retained
                self._finish(FinishReason.ERROR, error="DeadlineExceeded")
                return
            event = TokenEvent(index=index, text=text, arrived_at=arrived_at)
            self.events.append(event)
            for tap in self._taps:
                tap(event)
            yield event
            index += 1
            if index >= self.request.max_tokens:
                self._finish(FinishReason.MAX_TOKENS)
                return

    def drain(self) -> GeneratedContent:
        for _ in self:
            pass
        return self.content


def generate_stream(request: GenerationRequest, backend, clock=None) -> GenerationStream:
    """Start a generation against ``backend`` and return the event stream."""
    clock = clock or getattr(backend, "clock", None) or MonotonicClock()
    if not backend.descriptor.supports_language(request.language):
        raise ValueError(
            f"backend {backend.descriptor.name!r} does not support language {request.language!r}"
        )
    stream = GenerationStream(
        request=request,
        model_name=backend.descriptor.name,
        request_sent_at=clock.now_ns(),
    )
    stream._clock = clock
    stream._source = iter(backend.stream_tokens(request))
    return stream
