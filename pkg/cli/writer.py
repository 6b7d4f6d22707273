import csv
import io
import json
import logging
from collections.abc import Sequence
from dataclasses import asdict
from pathlib import Path

import aiofiles

from .errors import OutputError
from .runner import PointFailure, ResultRow

logger = logging.getLogger(__name__)

CSV_HEADER = ("rho_db", "gamma_th_db", "n", "m", "method", "value", "std_error", "flags")


def _number(value: float | None) -> str:
    return "" if value is None else repr(float(value))


def render_csv(rows: Sequence[ResultRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            (
                _number(row.rho_db),
                _number(row.gamma_th_db),
                row.n,
                row.m,
                row.method,
                _number(row.value),
                _number(row.std_error),
                ";".join(row.flags),
            )
        )
    return buffer.getvalue()


async def write_csv(path: str | Path, rows: Sequence[ResultRow]) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        async with aiofiles.open(target, "w", encoding="utf-8", newline="") as f:
            await f.write(render_csv(rows))
    except OSError as e:
        raise OutputError(f"cannot write {target}: {e}") from e
    logger.info(f"Wrote {len(rows)} rows to {target}")
    return target


def error_record_path(csv_path: str | Path) -> Path:
    path = Path(csv_path)
    return path.with_name(f"{path.stem}.errors.json")


async def write_error_record(csv_path: str | Path, run_id: str, failures: Sequence[PointFailure]) -> Path:
    target = error_record_path(csv_path)
    record = {"run_id": run_id, "failures": [asdict(f) for f in failures]}
    try:
        async with aiofiles.open(target, "w", encoding="utf-8") as f:
            await f.write(json.dumps(record, indent=2, sort_keys=True))
    except OSError as e:
        raise OutputError(f"cannot write {target}: {e}") from e
    logger.warning(f"Recorded {len(failures)} failed points in {target}")
    return target
