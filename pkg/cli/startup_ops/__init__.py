# ruff:  noqa: PLC0415

import logging
import sys
import time
from datetime import datetime
from pathlib import Path

from cli.configs import AppConfig


def setup_envars(env_file: str = ".config") -> bool:
    from dotenv import load_dotenv

    return load_dotenv(env_file)


def setup_warnings(config: AppConfig) -> None:
    if not config.DEBUG:
        import warnings

        warnings.simplefilter("ignore", ResourceWarning)
        warnings.filterwarnings("ignore", category=RuntimeWarning, module="scipy")


def setup_loggers(config: AppConfig) -> None:
    logging.getLogger("matplotlib").setLevel(logging.WARNING)
    logging.getLogger("asyncio").setLevel(logging.WARNING)
    log_handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if config.LOG_DIRECTORY:
        log_file = Path(config.LOG_DIRECTORY) / f"sweep_{datetime.now().strftime('%Y_%m_%d-%H_%M_%S')}.log"
        log_handlers.append(logging.FileHandler(filename=log_file))

    logging.basicConfig(
        level=config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        datefmt=config.LOG_DATEFORMAT,
        handlers=log_handlers,
        force=True,
    )
    if config.TIMEZONE:
        import pytz

        timezone = pytz.timezone(config.TIMEZONE)

        def time_converter(seconds: float | None) -> time.struct_time:
            if seconds is None:
                return datetime.now(tz=timezone).timetuple()
            return datetime.fromtimestamp(seconds, tz=timezone).timetuple()

        for handler in logging.root.handlers:
            if handler.formatter:
                handler.formatter.converter = time_converter
