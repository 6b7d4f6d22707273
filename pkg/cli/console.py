import logging
from collections import Counter

from rich.console import Console
from rich.table import Table

from lib.event_sys import (
    EventBus,
    PointDoneEvent,
    PointFailedEvent,
    SweepEvent,
    SweepFinishedEvent,
    SweepStartedEvent,
    get_event_bus,
)

logger = logging.getLogger(__name__)


class SweepConsole:
    """Terminal progress for one sweep, driven by bus events."""

    def __init__(self, run_id: str, event_bus: EventBus | None = None, console: Console | None = None) -> None:
        self.run_id = run_id
        self.event_bus = event_bus if event_bus is not None else get_event_bus()
        self.console = console if console is not None else Console(stderr=True)
        self.rows_by_method: Counter[str] = Counter()
        self.flags: Counter[str] = Counter()
        self.failures: list[PointFailedEvent] = []
        self.total_tasks = 0

    def attach(self) -> None:
        for event_type in ("sweep_started", "point_done", "point_failed", "sweep_finished"):
            self.event_bus.run_on(self.run_id, event_type, self._handle)

    def detach(self) -> None:
        self.event_bus.cleanup_run(self.run_id)

    async def _handle(self, event: SweepEvent) -> None:
        self.handle(event)

    def handle(self, event: SweepEvent) -> None:
        match event:
            case SweepStartedEvent():
                self.total_tasks = event.total_points
                self.console.rule(f"{event.scenario} sweep, {event.total_points} evaluations")
            case PointDoneEvent():
                self.rows_by_method[event.method] += 1
                self.flags.update(f for f in event.flags if f != "ok")
            case PointFailedEvent():
                self.failures.append(event)
                self.console.print(f"[red]evaluation {event.index} ({event.method}) failed:[/red] {event.error}")
            case SweepFinishedEvent():
                self.console.print(self.summary(event))

    def summary(self, event: SweepFinishedEvent) -> Table:
        table = Table(title=f"run {event.run_id[:8]}: {event.rows} rows in {event.elapsed:.2f}s")
        table.add_column("method")
        table.add_column("rows", justify="right")
        for method, count in sorted(self.rows_by_method.items()):
            table.add_row(method, str(count))
        for flag, count in sorted(self.flags.items()):
            table.add_row(f"[yellow]{flag}[/yellow]", str(count))
        if event.failures:
            table.add_row("[red]failed evaluations[/red]", str(event.failures))
        return table
