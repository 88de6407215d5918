"""Monotonic time sources.

Every timestamp in the runtime is an integer count of monotonic
nanoseconds.  Production code uses :class:`MonotonicClock`; tests and
deterministic replays use :class:`VirtualClock`, where ``sleep_ms``
advances time instantly instead of blocking.
"""

import time


class MonotonicClock:
    """Wall clock backed by ``time.monotonic_ns``."""

    def now_ns(self) -> int:
        return time.monotonic_ns()

    def sleep_ms(self, ms: float) -> None:
        if ms > 0:
            time.sleep(ms / 1000.0)


class VirtualClock:
    """Manually advanced clock for deterministic timing tests."""

    def __init__(self, start_ns: int = 0):
        self._now = int(start_ns)

    def now_ns(self) -> int:
        return self._now

    def sleep_ms(self, ms: float) -> None:
        if ms > 0:
            self._now += int(ms * 1_000_000)

    def advance_ms(self, ms: float) -> None:
        self.sleep_ms(ms)


MS = 1_000_000  # nanoseconds per millisecond


def ns_to_ms(ns: int) -> float:
    return ns / MS
