"""Evaluate every (N, method) pair of a run configuration and collect long-format rows."""

import asyncio
import logging
import math
import time
import uuid
from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np
from scipy import integrate

from lib import baselines, simkit
from lib.errors import AsymptoticRegimeError, MethodUnavailableError, NumericsError
from lib.event_sys import (
    EventBus,
    PointDoneEvent,
    PointFailedEvent,
    SweepFinishedEvent,
    SweepStartedEvent,
    get_event_bus,
)
from lib.irs import (
    IrsModel,
    MetricMethod,
    aser,
    aser_series,
    channel_cdf,
    channel_mgf,
    diversity_order,
    empirical_diversity_slope,
    outage_curve,
    outage_series,
    series_model,
    snr_pdf_curve,
    snr_pdf_series,
    upper_form,
)
from lib.sumprod import SeriesEvaluation, mgf_series_detailed

from .schema import RunConfig, linear_to_db

logger = logging.getLogger(__name__)

_ANALYTIC_METHODS = {m.value: m for m in MetricMethod}


@dataclass(frozen=True, slots=True)
class ResultRow:
    rho_db: float | None
    gamma_th_db: float | None
    n: int
    m: int
    method: str
    value: float | None
    std_error: float | None = None
    flags: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class PointFailure:
    index: int
    n: int
    method: str
    error_type: str
    message: str


@dataclass(slots=True)
class SweepResult:
    run_id: str
    rows: list[ResultRow] = field(default_factory=list)
    failures: list[PointFailure] = field(default_factory=list)


@dataclass(frozen=True, slots=True)
class _Task:
    index: int
    system: IrsModel
    method: str


TEvaluation = tuple[list[float | None], list[float | None], list[tuple[str, ...]]]


def _blank(count: int, flag: str) -> TEvaluation:
    return [None] * count, [None] * count, [(flag,)] * count


class SweepRunner:
    def __init__(
        self,
        config: RunConfig,
        workers: int = 1,
        run_id: str | None = None,
        event_bus: EventBus | None = None,
    ) -> None:
        self.config = config
        self.workers = workers
        self.run_id = uuid.uuid4().hex if run_id is None else run_id
        self.event_bus = event_bus if event_bus is not None else get_event_bus()

    def _tasks(self) -> list[_Task]:
        systems = self.config.system.irs_models()
        return [
            _Task(index, system, method)
            for index, (system, method) in enumerate((s, m) for s in systems for m in self.config.methods)
        ]

    async def run(self) -> SweepResult:
        tasks = self._tasks()
        result = SweepResult(self.run_id)
        started = time.perf_counter()
        self.event_bus.emit(SweepStartedEvent(self.run_id, self.config.scenario, len(tasks)))
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            outcomes = await asyncio.gather(*(loop.run_in_executor(pool, self._evaluate, task) for task in tasks))

        for task, (rows, failure) in zip(tasks, outcomes, strict=True):
            result.rows.extend(rows)
            if failure is not None:
                result.failures.append(failure)
                self.event_bus.emit(PointFailedEvent(self.run_id, task.index, task.method, failure.message))
            for row in rows:
                self.event_bus.emit(PointDoneEvent(self.run_id, task.index, row.method, row.value, row.flags))

        result.rows.extend(self._bound_ratios(result.rows))
        result.rows.extend(self._mass_checks(result.rows))
        elapsed = time.perf_counter() - started
        self.event_bus.emit(SweepFinishedEvent(self.run_id, len(result.rows), len(result.failures), elapsed))
        logger.info(f"Sweep {self.run_id} produced {len(result.rows)} rows in {elapsed:.2f}s")
        return result

    # -- per task ---------------------------------------------------------------------------------

    def _abscissae(self) -> list[tuple[float | None, float | None]]:
        """(rho_db, gamma_th_db) column values for each row of one task."""
        cfg = self.config
        match cfg.scenario:
            case "op":
                return [(rho_db, cfg.gamma_th_db) for rho_db in cfg.rho_grid_db]
            case "aser":
                return [(rho_db, None) for rho_db in cfg.rho_grid_db]
            case "pdf":
                return [(cfg.rho_grid_db[0], linear_to_db(x)) for x in cfg.points]
            case "mgf":
                return [(None, linear_to_db(s)) for s in cfg.points]
        return [(None, cfg.gamma_th_db)]

    def _evaluate(self, task: _Task) -> tuple[list[ResultRow], PointFailure | None]:
        abscissae = self._abscissae()
        n, m = task.system.elements, task.system.antennas
        failure = None
        try:
            values, errors, flags = self._dispatch(task)
        except MethodUnavailableError as e:
            logger.info(f"{task.method} unavailable for N={n}: {e}")
            values, errors, flags = _blank(len(abscissae), "unavailable")
        except AsymptoticRegimeError as e:
            logger.warning(f"{task.method} has no high-SNR regime for N={n}: {e}")
            values, errors, flags = _blank(1, "no_regime")
        except (NumericsError, ValueError, ArithmeticError) as e:
            logger.error(f"{task.method} failed for N={n}: {type(e).__name__}: {e}")
            failure = PointFailure(task.index, n, task.method, type(e).__name__, str(e))
            values, errors, flags = _blank(len(abscissae), f"error:{type(e).__name__}")

        rows = [
            ResultRow(rho_db, gamma_db, n, m, task.method, value, error, flag or ("ok",))
            for (rho_db, gamma_db), value, error, flag in zip(abscissae, values, errors, flags, strict=True)
        ]
        return rows, failure

    def _dispatch(self, task: _Task) -> TEvaluation:
        handler: dict[str, Callable[[_Task], TEvaluation]] = {
            "op": self._outage_values,
            "aser": self._error_rate,
            "pdf": self._density,
            "mgf": self._mgf,
            "diversity": self._diversity,
        }
        return handler[self.config.scenario](task)

    def _plain(self, values: list[float], flags: tuple[str, ...] = ()) -> TEvaluation:
        return list(values), [None] * len(values), [flags] * len(values)

    def _series(self, evaluations: list[SeriesEvaluation]) -> TEvaluation:
        return [e.value for e in evaluations], [None] * len(evaluations), [e.flags for e in evaluations]

    def _monte_carlo(self, estimates: list[simkit.McEstimate]) -> TEvaluation:
        return [e.estimate for e in estimates], [e.std_error for e in estimates], [("mc",)] * len(estimates)

    def _point_index(self, task: _Task, i: int) -> int:
        return task.index * 100_000 + i

    def _outage_values(self, task: _Task) -> TEvaluation:
        cfg = self.config
        rhos, gamma_th = cfg.rhos, cfg.gamma_th or 0.0
        if task.method == MetricMethod.EXACT_SERIES:
            return self._series([outage_series(task.system, gamma_th, rho, cfg.numerics) for rho in rhos])
        if task.method in _ANALYTIC_METHODS:
            method = _ANALYTIC_METHODS[task.method]
            return self._plain(outage_curve(task.system, gamma_th, rhos, method, cfg.numerics).tolist())
        if task.method == "mc":
            return self._monte_carlo(
                [
                    simkit.mc_outage(task.system, gamma_th, rho, cfg.monte_carlo, self._point_index(task, i))
                    for i, rho in enumerate(rhos)
                ]
            )
        approx = self._baseline(task)
        return self._plain([baselines.baseline_metric(approx, baselines.Metric.OP, r, gamma_th=gamma_th) for r in rhos])

    def _baseline(self, task: _Task) -> baselines.BaselineApprox:
        if task.method == "clt":
            return baselines.fit_clt(task.system)
        return baselines.fit_gamma(task.system)

    def _error_rate(self, task: _Task) -> TEvaluation:
        cfg = self.config
        modulation = cfg.modulation.to_spec()
        if task.method == MetricMethod.EXACT_SERIES:
            return self._series([aser_series(task.system, modulation, rho, cfg.numerics) for rho in cfg.rhos])
        if task.method in _ANALYTIC_METHODS:
            method = _ANALYTIC_METHODS[task.method]
            return self._plain([aser(task.system, modulation, rho, method, cfg.numerics) for rho in cfg.rhos])
        if task.method == "mc":
            return self._monte_carlo(
                [
                    simkit.mc_aser(task.system, modulation, rho, cfg.monte_carlo, self._point_index(task, i))
                    for i, rho in enumerate(cfg.rhos)
                ]
            )
        approx = self._baseline(task)
        return self._plain(
            [baselines.baseline_metric(approx, baselines.Metric.ASER, r, modulation=modulation) for r in cfg.rhos]
        )

    def _density(self, task: _Task) -> TEvaluation:
        cfg = self.config
        rho = cfg.rhos[0]
        if task.method == MetricMethod.EXACT_SERIES:
            return self._series([snr_pdf_series(task.system, x, rho, cfg.numerics) for x in cfg.points])
        if task.method in _ANALYTIC_METHODS:
            method = _ANALYTIC_METHODS[task.method]
            return self._plain(snr_pdf_curve(task.system, cfg.points, rho, method, cfg.numerics).tolist())
        if task.method == "mc":
            histogram = simkit.mc_histogram(
                task.system,
                cfg.monte_carlo,
                rho=rho,
                value_range=(0.0, max(cfg.points) * 1.05),
                point_index=self._point_index(task, 0),
            )
            pairs = [histogram.at(x) for x in cfg.points]
            return [p[0] for p in pairs], [p[1] for p in pairs], [("mc",)] * len(pairs)
        approx = self._baseline(task)
        return self._plain([baselines.baseline_metric(approx, baselines.Metric.PDF, rho, x=x) for x in cfg.points])

    def _mgf(self, task: _Task) -> TEvaluation:
        cfg = self.config
        match task.method:
            case "exact_numeric":
                mgf = channel_mgf(task.system, cfg.numerics)
                return self._plain([float(mgf(s)) for s in cfg.points])
            case "exact_series":
                model = series_model(task.system)
                return self._series([mgf_series_detailed(model, cfg.numerics.series, s) for s in cfg.points])
            case "upper":
                form = upper_form(task.system)
                return self._plain([form.mgf(s) for s in cfg.points])
            case "mc":
                return self._monte_carlo(
                    [
                        simkit.mc_mgf(task.system, s, cfg.monte_carlo, self._point_index(task, i))
                        for i, s in enumerate(cfg.points)
                    ]
                )
        law = self._baseline(task).distribution
        return self._plain([float(law.expect(lambda h, s=s: math.exp(-s * h))) for s in cfg.points])

    def _diversity(self, task: _Task) -> TEvaluation:
        values, _, _ = self._outage_values(task)
        curve = [(rho, v) for rho, v in zip(self.config.rhos, values, strict=True) if v is not None]
        slope = empirical_diversity_slope(curve, self.config.regime_threshold)
        system = task.system
        strict = system.source_irs.m > system.irs_destination.m
        flags = (f"analytic={diversity_order(system):g}",) if strict else ()
        return [slope], [None], [flags]

    # -- derived rows ---------------------------------------------------------------------------

    def _bound_ratios(self, rows: list[ResultRow]) -> list[ResultRow]:
        if self.config.scenario not in ("op", "aser"):
            return []
        exact = {(r.n, r.rho_db): r.value for r in rows if r.method == "exact_numeric" and r.value}
        upper = [r for r in rows if r.method == "upper" and r.value is not None]
        return [
            ResultRow(r.rho_db, r.gamma_th_db, r.n, r.m, "bound_ratio", r.value / exact[(r.n, r.rho_db)], None, ("ok",))
            for r in upper
            if (r.n, r.rho_db) in exact
        ]

    def _window_mass(self, system: IrsModel) -> float | None:
        """Exact probability that gamma lies between the first and last pdf point."""
        cfg = self.config
        rho = cfg.rhos[0]
        edges = [math.sqrt(min(cfg.points) / rho), math.sqrt(max(cfg.points) / rho)]
        try:
            low, high = channel_cdf(system, edges, cfg.numerics)
        except NumericsError as e:
            logger.warning(f"No reference mass for N={system.elements}: {e}")
            return None
        return float(high - low)

    def _mass_checks(self, rows: list[ResultRow]) -> list[ResultRow]:
        """Trapezoid integral of each tabulated density, flagged with the exact mass of the same window."""
        cfg = self.config
        if cfg.scenario != "pdf" or len(cfg.points) < 2:
            return []
        order = np.argsort(cfg.points)
        points = np.asarray(cfg.points)[order]
        rho_db = cfg.rho_grid_db[0]
        checks = []
        for system in cfg.system.irs_models():
            expected = self._window_mass(system)
            reference = () if expected is None else (f"expected={expected:.6g}",)
            for method in cfg.methods:
                values = [
                    r.value
                    for r in rows
                    if (r.n, r.m) == (system.elements, system.antennas) and r.method == method
                ]
                if len(values) != len(points) or any(v is None for v in values):
                    continue
                mass = float(integrate.trapezoid(np.asarray(values, dtype=float)[order], points))
                row = ResultRow(rho_db, None, system.elements, system.antennas, "mass_check", mass)
                checks.append(replace(row, flags=(f"of={method}", *reference)))
        return checks
