from pydantic import Field
from pydantic_settings import BaseSettings


class RuntimeConfig(BaseSettings):
    DEBUG: bool = False
    TIMEZONE: str = Field(description="Timezone used for log timestamps", default="UTC")
    WORKERS: int = Field(description="Threads evaluating sweep points", default=4, ge=1)
