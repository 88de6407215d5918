"""Raw per-token timing traces captured from generation streams."""

import threading
from dataclasses import dataclass, field

from sankofa import SankofaError


class EmptyStream(SankofaError):
    pass


@dataclass
class InferenceTrace:
    trace_id: str
    request_sent_at: int  # monotonic ns
    token_times: list[int]  # monotonic ns, index-aligned with TokenEvents
    completed_at: int
    error: str | None = None

    def __post_init__(self):
        if not self.token_times:
            raise EmptyStream(f"trace {self.trace_id} has no token timestamps")
        times = [self.request_sent_at, *self.token_times, self.completed_at]
        if any(b < a for a, b in zip(times, times[1:])):
            raise ValueError(f"trace {self.trace_id} timestamps are not monotonic")


def record_trace(stream, trace_id: str = "trace-0") -> InferenceTrace:
    """Drain a generation stream, copying token arrival timestamps.

    ``stream`` yields events with an ``arrived_at`` field and exposes
    ``request_sent_at``; after exhaustion it exposes ``completed_at``
    and ``content``.  A stream failing mid-way keeps the partial trace
    with an error mark.
    """
    token_times: list[int] = []
    error = None
    try:
        for event in stream:
            token_times.append(event.arrived_at)
    except Exception as exc:  # partial capture on stream failure
        error = str(exc) or type(exc).__name__
    if not token_times:
        raise EmptyStream("stream produced no token events")
    completed_at = getattr(stream, "completed_at", None)
    if completed_at is None:
        completed_at = token_times[-1]
    content = getattr(stream, "content", None)
    if error is None and content is not None and content.finish_reason.name == "ERROR":
        error = content.error or "stream error"
    return InferenceTrace(
        trace_id=trace_id,
        request_sent_at=getattr(stream, "request_sent_at", token_times[0]),
        token_times=token_times,
        completed_at=completed_at,
        error=error,
    )


@dataclass
class MetricsStore:
    """Thread-safe trace storage; trace ids are sequential and stable."""

    traces: dict[str, InferenceTrace] = field(default_factory=dict)
    _next: int = 1
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def record(self, stream) -> InferenceTrace:
        with self._lock:
            trace_id = f"trace-{self._next:04d}"
            self._next += 1
        trace = record_trace(stream, trace_id)
        with self._lock:
            self.traces[trace_id] = trace
        return trace

    def get(self, trace_id: str) -> InferenceTrace | None:
        with self._lock:
            return self.traces.get(trace_id)
