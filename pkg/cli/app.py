import argparse
import asyncio
import json
import logging
from pathlib import Path
from typing import Any

from cli.configs import AppConfig
from cli.console import SweepConsole
from cli.errors import CliError, EvaluatorError
from cli.plot_script import emit_plot_script
from cli.runner import SweepRunner
from cli.schema import load_run_config, run_config_schema
from cli.startup_ops import setup_envars, setup_loggers, setup_warnings
from cli.writer import write_csv, write_error_record
from lib.event_sys import get_event_bus, reset_event_bus

logger = logging.getLogger("app")


class Application:
    def __init__(self, config_params: dict[str, Any] | None = None) -> None:
        self.config = AppConfig() if config_params is None else AppConfig(**config_params)
        self.event_bus = get_event_bus()
        self._initialized = False

    def initialize(self) -> None:
        if not setup_envars():
            logger.debug("No .config file found, using environment and defaults")
        setup_warnings(self.config)
        setup_loggers(self.config)
        logger.debug(f"Config Details: {self.config}")
        self._initialized = True

    async def run(self, args: argparse.Namespace) -> int:
        """Dispatch a parsed command line and return the process exit code."""
        if not self._initialized:
            self.initialize()
        try:
            match args.command:
                case "run":
                    await self.run_sweep(args.config, args.output, workers=args.workers, plot=args.plot)
                case "validate":
                    config = await load_run_config(args.config)
                    print(f"{args.config}: valid {config.scenario} config")  # noqa: T201
                case "schema":
                    print(json.dumps(run_config_schema(), indent=2))  # noqa: T201
                case "plot-script":
                    await emit_plot_script(args.csv, args.scenario)
        except CliError as e:
            logger.error(str(e))
            return e.exit_code
        finally:
            reset_event_bus()
            self.event_bus = get_event_bus()
        return 0

    async def run_sweep(self, config_path: str, output: str, *, workers: int | None = None, plot: bool = False) -> Path:
        config = await load_run_config(config_path)
        runner = SweepRunner(config, workers or self.config.WORKERS, event_bus=self.event_bus)
        console = SweepConsole(runner.run_id, self.event_bus)
        console.attach()
        try:
            result = await runner.run()
            # let queued run handlers drain before detaching
            await asyncio.sleep(0)
        finally:
            console.detach()

        target = await write_csv(output, result.rows)
        if plot:
            await emit_plot_script(target, config.scenario)
        if result.failures:
            await write_error_record(target, result.run_id, result.failures)
            raise EvaluatorError(len(result.failures))
        return target
