from pydantic import BaseModel, ConfigDict, Field


class McConfig(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    master_seed: int = Field(default=20240601, ge=0, lt=2**64)
    trials: int = Field(default=100_000, ge=100)
    chunk_size: int = Field(default=250_000, ge=1_000, description="Draws per independent substream")
    histogram_bins: int = Field(default=60, ge=2)
