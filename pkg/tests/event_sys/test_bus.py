# ruff: noqa: S101
"""Test cases for the sweep EventBus"""

import asyncio
from unittest.mock import MagicMock

import pytest

from lib.event_sys import (
    AsyncEventHandler,
    EventBus,
    PointDoneEvent,
    SweepEvent,
    SweepStartedEvent,
    get_event_bus,
    reset_event_bus,
)


@pytest.fixture
def event_bus() -> EventBus:
    """Create a fresh EventBus for each test"""
    return EventBus()


def point_done(run_id: str = "run-a", index: int = 0) -> PointDoneEvent:
    return PointDoneEvent(run_id=run_id, index=index, method="upper", value=1e-3, flags=("ok",))


def recorder(received: list[SweepEvent]) -> AsyncEventHandler:
    async def handler(event: SweepEvent) -> None:
        received.append(event)

    return handler


class TestRunSubscriptions:
    """Test cases for handlers scoped to one run"""

    @pytest.mark.asyncio
    async def test_run_filter(self, event_bus: EventBus) -> None:
        """Test that run handlers ignore other runs"""
        received: list[SweepEvent] = []
        event_bus.run_on("run-a", "point_done", recorder(received))

        event_bus.emit(point_done("run-a", 1))
        event_bus.emit(point_done("run-b", 2))
        await asyncio.sleep(0.01)

        assert [e.index for e in received] == [1]

    @pytest.mark.asyncio
    async def test_event_types_route(self, event_bus: EventBus) -> None:
        """Test that handlers only see their own event type"""
        received: list[SweepEvent] = []
        event_bus.run_on("run-a", "sweep_started", recorder(received))

        event_bus.emit(point_done())
        event_bus.emit(SweepStartedEvent(run_id="run-a", scenario="op", total_points=4))
        await asyncio.sleep(0.01)

        assert len(received) == 1
        assert received[0].total_points == 4

    @pytest.mark.asyncio
    async def test_cleanup(self, event_bus: EventBus) -> None:
        """Test that a cleaned-up run receives nothing and other runs keep their handlers"""
        first: list[SweepEvent] = []
        second: list[SweepEvent] = []
        event_bus.run_on("run-a", "point_done", recorder(first))
        event_bus.run_on("run-a", "sweep_finished", recorder(first))
        event_bus.run_on("run-b", "point_done", recorder(second))

        event_bus.cleanup_run("run-a")
        event_bus.emit(point_done("run-a"))
        event_bus.emit(point_done("run-b"))
        await asyncio.sleep(0.01)

        assert first == []
        assert len(second) == 1

    def test_cleanup_unknown_run(self, event_bus: EventBus) -> None:
        event_bus.cleanup_run("never-started")

    @pytest.mark.asyncio
    async def test_failing_run_handler_is_contained(self, event_bus: EventBus) -> None:
        """Test that an exception in a run handler is logged, not raised"""
        calls: list[int] = []

        async def failing(event: SweepEvent) -> None:
            calls.append(event.index)
            raise RuntimeError("boom")

        event_bus.run_on("run-a", "point_done", failing)
        event_bus.emit(point_done("run-a", 3))
        await asyncio.sleep(0.01)

        assert calls == [3]


class TestGlobalBus:
    """Test cases for the singleton accessors"""

    def test_singleton(self) -> None:
        reset_event_bus()
        assert get_event_bus() is get_event_bus()

    @pytest.mark.asyncio
    async def test_reset_drops_listeners(self) -> None:
        bus = get_event_bus()
        handler = MagicMock()

        async def forward(event: SweepEvent) -> None:
            handler(event)

        bus.run_on("run-a", "point_done", forward)

        reset_event_bus()
        bus.emit(point_done())
        await asyncio.sleep(0.01)

        handler.assert_not_called()
        assert get_event_bus() is not bus
