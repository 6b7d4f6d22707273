import json
from pathlib import Path
from typing import Any

import pytest

from lib.event_sys import EventBus

from .sample import TWriteConfig


@pytest.fixture
def event_bus() -> EventBus:
    return EventBus()


@pytest.fixture
def write_config(tmp_path: Path) -> TWriteConfig:
    """Dump a config dict to a file and return its path."""

    def write(config: dict[str, Any], name: str = "run.json") -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(config), encoding="utf-8")
        return path

    return write
