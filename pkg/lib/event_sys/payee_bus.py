import logging

from pyee.asyncio import AsyncIOEventEmitter

from .types import AsyncEventHandler, EventType, SweepEvent

logger = logging.getLogger("event_sys")


class EventBus:
    """Sweep progress bus on top of a pyee emitter; handlers are scoped to one run."""

    def __init__(self) -> None:
        self.emitter = AsyncIOEventEmitter()
        self._active_runs: dict[str, list[tuple[EventType, AsyncEventHandler]]] = {}

    def emit(self, event: SweepEvent) -> None:
        """Emit event to all subscribers; a failing handler never stops the sweep."""
        try:
            self.emitter.emit(event.event_type, event)
            logger.debug(f"Emitted {event.event_type} for run {event.run_id}")
        except Exception as e:
            logger.error(f"Error emitting event {event.event_type}: {e}")

    def run_on(self, run_id: str, event_type: EventType, handler: AsyncEventHandler) -> None:
        """Subscribe to events of a single run."""

        async def run_handler(event: SweepEvent) -> None:
            if event.run_id == run_id:
                try:
                    await handler(event)
                except Exception as e:
                    logger.error(f"Error in run handler for {run_id}: {e}")

        self.emitter.on(event_type, run_handler)
        self._active_runs.setdefault(run_id, []).append((event_type, run_handler))
        logger.debug(f"Subscribed run handler for {run_id} to {event_type}")

    def cleanup_run(self, run_id: str) -> None:
        handlers = self._active_runs.pop(run_id, [])
        for event_type, handler in handlers:
            self.emitter.remove_listener(event_type, handler)
        logger.debug(f"Cleaned up {len(handlers)} handlers for run {run_id}")

    def remove_all_listeners(self) -> None:
        self.emitter.remove_all_listeners()
        self._active_runs.clear()
        logger.debug("Removed all listeners")
