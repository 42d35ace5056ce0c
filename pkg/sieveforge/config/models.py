"""
Configuration models using Pydantic.
"""

from pydantic import BaseModel, ConfigDict, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class EnumerationSettings(BaseSettings):
    """
    Search budgets for the exhaustive kernels.

    Reads ``SIEVEFORGE_BUDGET``, ``SIEVEFORGE_MAX_SIEVES`` and
    ``SIEVEFORGE_STRICT_BASIS`` from the environment; explicit values win.
    """

    budget: int = Field(
        default=2**20, ge=1, description="Maximum saturation states per search"
    )
    max_sieves: int = Field(
        default=2**20, ge=1, description="Maximum sieves enumerated per object"
    )
    strict_basis: bool = Field(
        default=False, description="Require pullbacks of basis sieves to be members"
    )

    model_config = SettingsConfigDict(
        env_prefix="SIEVEFORGE_",
        validate_assignment=True,
        extra="forbid",
    )


class LawSettings(BaseModel):
    """Law corpus generation settings."""

    seed: int = Field(default=42, description="Seed for the random corpus")
    random_locales: int = Field(
        default=100, ge=0, description="Random finite locales in the corpus"
    )
    random_posets: int = Field(
        default=50, ge=0, description="Random poset categories in the corpus"
    )
    max_random_elements: int = Field(
        default=6, ge=2, le=8, description="Largest random lattice"
    )
    pruning_pairs: int = Field(
        default=200, ge=0, description="(J, F) pairs built by pruning filters"
    )
    basis_samples: int = Field(
        default=500, ge=0, description="Sampled bases for the superset oracle"
    )
    squarefree_limit: int = Field(
        default=200, ge=1, description="Largest n in the divisor-lattice law"
    )


class ReportSettings(BaseModel):
    """Report emission settings."""

    format: str = Field(default="json", description="Report format")
    indent: int = Field(default=2, ge=0, le=8, description="JSON indentation")
    include_timing: bool = Field(
        default=False, description="Emit wall-clock timing in reports"
    )

    @field_validator("format")
    @classmethod
    def validate_format(cls, value: str) -> str:
        """Validate report format."""
        allowed = ["json", "text"]
        if value not in allowed:
            raise ValueError(f"format must be one of {allowed}")
        return value


class LoggingSettings(BaseModel):
    """Logging configuration settings."""

    level: str = Field(default="WARNING", description="Logging level")
    format_string: str = Field(
        default="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        description="Log format string",
    )
    file_path: str | None = Field(default=None, description="Optional log file path")
    max_file_size_mb: int = Field(
        default=10, ge=1, description="Max log file size in MB"
    )
    backup_count: int = Field(default=5, ge=1, description="Number of backup log files")
    enable_json_logs: bool = Field(
        default=False, description="Enable JSON formatted logs"
    )

    @field_validator("level")
    @classmethod
    def validate_level(cls, value: str) -> str:
        """Validate logging level."""
        allowed = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        value_upper = value.upper()
        if value_upper not in allowed:
            raise ValueError(f"level must be one of {allowed}")
        return value_upper


class ApplicationSettings(BaseModel):
    """Main application settings."""

    enumeration: EnumerationSettings = Field(
        default_factory=EnumerationSettings, description="Enumeration budgets"
    )
    laws: LawSettings = Field(default_factory=LawSettings, description="Law corpus")
    report: ReportSettings = Field(
        default_factory=ReportSettings, description="Report settings"
    )
    logging: LoggingSettings = Field(
        default_factory=LoggingSettings, description="Logging settings"
    )

    model_config = ConfigDict(
        validate_assignment=True,
        extra="forbid",
    )
