"""Adaptive testing sessions: maximum-information selection + stop rules.

A session owns its item pool, advances one response at a time, and stops
when the ability standard error drops under the threshold (after the
minimum item count), the item cap is reached, or the pool runs out.
"""

from dataclasses import dataclass, field
from pathlib import Path

from sankofa import SankofaError
from sankofa.assessment.estimate import (
    AbilityEstimate,
    EstimationMethod,
    estimate_ability,
)
from sankofa.assessment.irt import ItemParams, item_information


class PoolExhausted(SankofaError):
    pass


class SessionStopped(SankofaError):
    pass


class NoPendingItem(SankofaError):
    pass


@dataclass(frozen=True)
class StopRule:
    se_threshold: float = 0.35
    max_items: int = 20
    min_items: int = 3


def _id_key(item_id: str):
    # "lowest id" is numeric when ids are numeric, lexicographic otherwise
    return (0, int(item_id), "") if item_id.isdigit() else (1, 0, item_id)


def select_next_item(theta: float, pool: list[ItemParams], administered: list[str]) -> ItemParams:
    taken = set(administered)
    remaining = [item for item in pool if item.item_id not in taken]
    if not remaining:
        raise PoolExhausted("no unadministered items left")
    best = remaining[0]
    best_info = item_information(theta, best)
    for item in remaining[1:]:
        info = item_information(theta, item)
        if info > best_info or (info == best_info and _id_key(item.item_id) < _id_key(best.item_id)):
            best, best_info = item, info
    return best


@dataclass
class SessionStep:
    item_id: str
    response: bool
    theta: float
    standard_error: float


@dataclass
class AdaptiveSession:
    session_id: str
    pool: list[ItemParams]
    stop: StopRule = field(default_factory=StopRule)
    method: EstimationMethod = EstimationMethod.EAP
    administered: list[str] = field(default_factory=list)
    responses: list[bool] = field(default_factory=list)
    steps: list[SessionStep] = field(default_factory=list)
    current: AbilityEstimate | None = None
    pending: ItemParams | None = None
    stopped: bool = False
    stop_reason: str | None = None

    def items_administered(self) -> list[ItemParams]:
        by_id = {item.item_id: item for item in self.pool}
        return [by_id[i] for i in self.administered]


def create_session(
    session_id: str,
    pool: list[ItemParams],
    stop: StopRule | None = None,
    start_theta: float = 0.0,
) -> AdaptiveSession:
    if not pool:
        raise PoolExhausted("cannot start a session on an empty pool")
    ids = [item.item_id for item in pool]
    if len(set(ids)) != len(ids):
        raise ValueError("pool has duplicate item ids")
    session = AdaptiveSession(session_id=session_id, pool=list(pool), stop=stop or StopRule())
    session.pending = select_next_item(start_theta, session.pool, [])
    return session


def step_session(session: AdaptiveSession, response: bool) -> AdaptiveSession:
    """Record one response, re-estimate ability, pick the next item or stop."""
    if session.stopped:
        raise SessionStopped(f"session {session.session_id} already stopped")
    if session.pending is None:
        raise NoPendingItem(f"session {session.session_id} has no pending item")

    session.administered.append(session.pending.item_id)
    session.responses.append(bool(response))
    session.pending = None
    session.current = estimate_ability(
        session.responses, session.items_administered(), session.method
    )
    session.steps.append(
        SessionStep(
            item_id=session.administered[-1],
            response=session.responses[-1],
            theta=session.current.theta,
            standard_error=session.current.standard_error,
        )
    )

    n = len(session.administered)
    if n >= session.stop.max_items:
        session.stopped, session.stop_reason = True, "max_items"
    elif n >= session.stop.min_items and session.current.standard_error < session.stop.se_threshold:
        session.stopped, session.stop_reason = True, "precision"
    else:
        try:
            session.pending = select_next_item(
                session.current.theta, session.pool, session.administered
            )
        except PoolExhausted:
            session.stopped, session.stop_reason = True, "pool_exhausted"
    return session


def session_transcript(session: AdaptiveSession) -> str:
    """Line-delimited ``item_id response theta se`` per step."""
    lines = [
        f"{s.item_id} {int(s.response)} {s.theta:.6f} {s.standard_error:.6f}"
        for s in session.steps
    ]
    return "\n".join(lines) + ("\n" if lines else "")


def render_item_pool(pool: list[ItemParams]) -> str:
    """Line-delimited ``item_id a b c prompt_ref`` records."""
    lines = [f"{i.item_id} {i.a} {i.b} {i.c} {i.prompt_ref}" for i in pool]
    return "\n".join(lines) + ("\n" if lines else "")


def load_item_pool(path: str | Path) -> list[ItemParams]:
    pool = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 5:
            raise ValueError(f"{path}:{lineno}: expected 'item_id a b c prompt_ref'")
        item_id, a, b, c, prompt_ref = parts
        pool.append(ItemParams(item_id, float(a), float(b), float(c), prompt_ref))
    if not pool:
        raise ValueError(f"{path}: empty item pool")
    return pool
