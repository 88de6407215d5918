"""Power sampling and window integration.

Providers return instantaneous microwatts: :class:`FilePowerProvider`
reads an integer from a sensor-style file path, and
:class:`ScriptPowerProvider` replays a ``<t_ms> <microwatts>`` script.
``summarize_power`` integrates samples as a step function over a trace
window: each sample's value holds until the next sample, the first
sample back-extends to the window start and the last extends to the
window end.
"""

import threading
from dataclasses import dataclass
from pathlib import Path

from sankofa import SankofaError


class NoSamplesInWindow(SankofaError):
    pass


@dataclass(frozen=True)
class PowerSample:
    at: int  # monotonic ns
    watts: float

    def __post_init__(self):
        if self.watts < 0:
            raise ValueError("watts must be non-negative")


@dataclass(frozen=True)
class PowerSummary:
    avg_watts: float
    sample_count: int


def summarize_power(samples: list[PowerSample], window_start: int, window_end: int) -> PowerSummary:
    if window_end <= window_start:
        raise ValueError("window must have positive duration")
    inside = sorted((s for s in samples if window_start <= s.at <= window_end), key=lambda s: s.at)
    if not inside:
        raise NoSamplesInWindow(f"no power samples in [{window_start}, {window_end}]")
    energy = 0.0  # watt-nanoseconds
    for i, sample in enumerate(inside):
        seg_start = window_start if i == 0 else sample.at
        seg_end = inside[i + 1].at if i + 1 < len(inside) else window_end
        energy += sample.watts * (seg_end - seg_start)
    return PowerSummary(avg_watts=energy / (window_end - window_start), sample_count=len(inside))


class FilePowerProvider:
    """Reads instantaneous microwatts from a sensor file (one integer)."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def read_microwatts(self) -> int:
        return int(self.path.read_text().strip())


class ScriptPowerProvider:
    """Replays scripted readings; value at time t is the last entry with t_ms <= t."""

    def __init__(self, script: list[tuple[float, int]]):
        if not script:
            raise ValueError("empty power script")
        self.script = sorted(script)

    def read_at_ms(self, t_ms: float) -> int:
        value = self.script[0][1]
        for entry_ms, microwatts in self.script:
            if entry_ms <= t_ms:
                value = microwatts
            else:
                break
        return value


def load_power_script(path: str | Path) -> list[tuple[float, int]]:
    """Parse ``<t_ms> <microwatts>`` lines."""
    script = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{lineno}: expected '<t_ms> <microwatts>'")
        script.append((float(parts[0]), int(parts[1])))
    return script


def sample_script(
    script: list[tuple[float, int]],
    window_start: int,
    window_end: int,
    period_ms: float = 100.0,
) -> list[PowerSample]:
    """Synthesize periodic samples over a window from a scripted provider.

    Script times are relative to the window start; used by virtual-clock
    benchmark runs in place of a live polling thread.
    """
    provider = ScriptPowerProvider(script)
    samples = []
    t = window_start
    period_ns = int(period_ms * 1_000_000)
    while t <= window_end:
        rel_ms = (t - window_start) / 1_000_000
        samples.append(PowerSample(at=t, watts=provider.read_at_ms(rel_ms) / 1e6))
        t += period_ns
    return samples


class PowerSampler:
    """Polls a provider at a fixed period from a background thread."""

    def __init__(self, provider, clock, period_ms: float = 100.0):
        self.provider = provider
        self.clock = clock
        self.period_ms = period_ms
        self.samples: list[PowerSample] = []
        self._stop = threading.Event()
        self._thread: threading.Thread | None = None
        self._lock = threading.Lock()

    def poll_once(self) -> PowerSample:
        sample = PowerSample(at=self.clock.now_ns(), watts=self.provider.read_microwatts() / 1e6)
        with self._lock:
            self.samples.append(sample)
        return sample

    def start(self) -> None:
        def loop():
            while not self._stop.is_set():
                self.poll_once()
                self._stop.wait(self.period_ms / 1000.0)

        self._thread = threading.Thread(target=loop, name="power-sampler", daemon=True)
        self._thread.start()

    def stop(self) -> None:
        self._stop.set()
        if self._thread is not None:
            self._thread.join()

    def snapshot(self) -> list[PowerSample]:
        with self._lock:
            return list(self.samples)
