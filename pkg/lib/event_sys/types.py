from __future__ import annotations

from collections.abc import Awaitable, Callable
from dataclasses import dataclass, field
from datetime import UTC, datetime
from typing import Literal

EventType = Literal[
    "sweep_started",
    "point_done",
    "point_failed",
    "sweep_finished",
]


def _now() -> datetime:
    return datetime.now(UTC)


@dataclass(frozen=True, slots=True)
class SweepStartedEvent:
    run_id: str
    scenario: str
    total_points: int
    timestamp: datetime = field(default_factory=_now)

    @property
    def event_type(self) -> EventType:
        return "sweep_started"


@dataclass(frozen=True, slots=True)
class PointDoneEvent:
    run_id: str
    index: int
    method: str
    value: float | None
    flags: tuple[str, ...] = ()
    timestamp: datetime = field(default_factory=_now)

    @property
    def event_type(self) -> EventType:
        return "point_done"


@dataclass(frozen=True, slots=True)
class PointFailedEvent:
    run_id: str
    index: int
    method: str
    error: str
    timestamp: datetime = field(default_factory=_now)

    @property
    def event_type(self) -> EventType:
        return "point_failed"


@dataclass(frozen=True, slots=True)
class SweepFinishedEvent:
    run_id: str
    rows: int
    failures: int
    elapsed: float
    timestamp: datetime = field(default_factory=_now)

    @property
    def event_type(self) -> EventType:
        return "sweep_finished"


SweepEvent = SweepStartedEvent | PointDoneEvent | PointFailedEvent | SweepFinishedEvent

AsyncEventHandler = Callable[[SweepEvent], Awaitable[None]]
