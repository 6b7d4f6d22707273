# ruff: noqa: PLW0603
import logging

from .payee_bus import EventBus
from .types import (
    AsyncEventHandler,
    EventType,
    PointDoneEvent,
    PointFailedEvent,
    SweepEvent,
    SweepFinishedEvent,
    SweepStartedEvent,
)

__all__ = (
    "AsyncEventHandler",
    "EventBus",
    "EventType",
    "PointDoneEvent",
    "PointFailedEvent",
    "SweepEvent",
    "SweepFinishedEvent",
    "SweepStartedEvent",
    "get_event_bus",
    "reset_event_bus",
)

logger = logging.getLogger("event_sys")

_event_bus: EventBus | None = None


def get_event_bus() -> EventBus:
    """Bus shared by the sweep runner, the console and any run-scoped listeners."""
    global _event_bus
    if _event_bus is None:
        _event_bus = EventBus()
        logger.debug("Created sweep event bus")
    return _event_bus


def reset_event_bus() -> None:
    """Drop every listener and forget the bus; the next sweep starts from a fresh one."""
    global _event_bus
    if _event_bus is not None:
        _event_bus.remove_all_listeners()
    _event_bus = None
    logger.debug("Reset sweep event bus")
