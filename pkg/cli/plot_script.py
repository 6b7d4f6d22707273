"""Write a standalone matplotlib script that plots a results CSV."""

import csv
import logging
from pathlib import Path

import aiofiles

from .errors import OutputError, PlotScriptError
from .schema import TScenario

logger = logging.getLogger(__name__)

_AXES: dict[str, tuple[str, str, str, bool]] = {
    # scenario: x column, x label, y label, logarithmic y
    "op": ("rho_db", "Average SNR (dB)", "Outage probability", True),
    "aser": ("rho_db", "Average SNR (dB)", "Average symbol error rate", True),
    "pdf": ("gamma_th_db", "SNR (dB)", "Density", False),
    "mgf": ("gamma_th_db", "10 log10 s", "MGF", True),
    "diversity": ("n", "Reflecting elements N", "Diversity slope", False),
}

_TEMPLATE = '''"""Plot {csv_name} ({scenario})."""

import csv
from collections import defaultdict
from pathlib import Path

import matplotlib.pyplot as plt

CSV_PATH = Path(__file__).parent / "{csv_name}"

curves = defaultdict(list)
with CSV_PATH.open(encoding="utf-8") as f:
    for row in csv.DictReader(f):
        if row["value"] and row["{x_column}"] and row["method"] != "bound_ratio":
            curves[(row["method"], row["n"], row["m"])].append((float(row["{x_column}"]), float(row["value"])))

fig, ax = plt.subplots()
for (method, n, m), points in sorted(curves.items()):
    points.sort()
    xs, ys = zip(*points)
    ax.plot(xs, ys, "o" if method == "mc" else "-", label=f"{{method}} N={{n}} M={{m}}")
ax.set_xlabel("{x_label}")
ax.set_ylabel("{y_label}")
ax.set_yscale("{y_scale}")
ax.grid(True, which="both", alpha=0.3)
ax.legend()
fig.savefig(CSV_PATH.with_suffix(".png"), dpi=150)
'''


async def emit_plot_script(csv_path: str | Path, scenario: TScenario) -> Path:
    """Check the CSV header and write `<stem>_plot.py` next to it."""
    source = Path(csv_path)
    if scenario not in _AXES:
        raise PlotScriptError(f"no plot layout for scenario {scenario!r}")
    x_column, x_label, y_label, log_y = _AXES[scenario]
    try:
        async with aiofiles.open(source, encoding="utf-8") as f:
            header = next(csv.reader([await f.readline()]), [])
    except OSError as e:
        raise OutputError(f"cannot read {source}: {e}") from e

    for column in (x_column, "value", "method", "n", "m"):
        if column not in header:
            raise PlotScriptError(f"{source.name} has no {column!r} column")

    script = _TEMPLATE.format(
        csv_name=source.name,
        scenario=scenario,
        x_column=x_column,
        x_label=x_label,
        y_label=y_label,
        y_scale="log" if log_y else "linear",
    )
    target = source.with_name(f"{source.stem}_plot.py")
    try:
        async with aiofiles.open(target, "w", encoding="utf-8") as f:
            await f.write(script)
    except OSError as e:
        raise OutputError(f"cannot write {target}: {e}") from e
    logger.info(f"Wrote plot script {target}")
    return target
