"""
Configuration module for sieveforge.
"""

from sieveforge.config.models import (
    ApplicationSettings,
    EnumerationSettings,
    LawSettings,
    LoggingSettings,
    ReportSettings,
)
from sieveforge.config.settings import (
    apply_overrides,
    create_default_config,
    get_settings,
    load_settings,
    reset_settings,
    use_settings,
)

__all__ = [
    "ApplicationSettings",
    "EnumerationSettings",
    "LawSettings",
    "ReportSettings",
    "LoggingSettings",
    "apply_overrides",
    "create_default_config",
    "load_settings",
    "get_settings",
    "reset_settings",
    "use_settings",
]
