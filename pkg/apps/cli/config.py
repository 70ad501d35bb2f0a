"""CLI configuration using pydantic-settings.

A run is fully determined by its flags, so only values passed to the
constructor are read: no environment variables, no .env file.
"""
from typing import Literal, Optional, Tuple, Type

from pydantic import Field
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource, SettingsConfigDict


class Settings(BaseSettings):
    """Knobs shared by all subcommands."""

    model_config = SettingsConfigDict(case_sensitive=False, extra="ignore")

    # Logging
    log_level: str = "WARNING"
    log_format: Literal["console", "json"] = "console"

    # Bounds
    bit_cap: int = Field(default=10**6, ge=64)
    bound_mode: Literal["as-stated", "dube-consistent"] = "as-stated"

    # Groebner
    groebner_max_steps: int = Field(default=5000, ge=1)  # basis extensions
    groebner_max_pairs: int = Field(default=200_000, ge=1)  # processed S-pairs
    product_criterion: bool = False
    interreduce: bool = False

    # Search and counting
    search_node_budget: int = Field(default=10_000_000, ge=1)
    search_time_budget: Optional[float] = Field(default=None, gt=0)  # seconds, soft
    count_budget: int = Field(default=10_000_000, ge=1)  # points enumerated
    threads: int = Field(default=1, ge=1)

    # Randomized drivers only
    seed: Optional[int] = None

    @classmethod
    def settings_customise_sources(
        cls,
        settings_cls: Type[BaseSettings],
        init_settings: PydanticBaseSettingsSource,
        env_settings: PydanticBaseSettingsSource,
        dotenv_settings: PydanticBaseSettingsSource,
        file_secret_settings: PydanticBaseSettingsSource,
    ) -> Tuple[PydanticBaseSettingsSource, ...]:
        return (init_settings,)
