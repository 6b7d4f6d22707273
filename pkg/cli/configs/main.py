from functools import lru_cache

from pydantic_settings import SettingsConfigDict

from cli.configs.log_conf import LogConfig

from .runtime_conf import RuntimeConfig


class AppConfig(LogConfig, RuntimeConfig):
    model_config = SettingsConfigDict(
        frozen=True,
        env_nested_delimiter="__",
        env_file=".config",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache(maxsize=1)
def get_app_config() -> AppConfig:
    return AppConfig()
