from .log_conf import LogConfig
from .main import AppConfig, get_app_config
from .runtime_conf import RuntimeConfig

__all__ = ("AppConfig", "LogConfig", "RuntimeConfig", "get_app_config")
