"""
Settings loader and manager.

Settings are layered: ``config.yaml`` (or the file named by
``SIEVEFORGE_CONFIG``), then ``SIEVEFORGE_*`` environment variables for the
enumeration budgets, then command-line flags through ``apply_overrides``.
"""

import logging
import os
from pathlib import Path
from typing import Any

import pydantic
import yaml

from sieveforge.config.models import ApplicationSettings
from sieveforge.core.exceptions import ConfigurationError


logger = logging.getLogger(__name__)

CONFIG_ENV = "SIEVEFORGE_CONFIG"

_settings_instance: ApplicationSettings | None = None


def _describe(error: pydantic.ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in item['loc'])}: {item['msg']}"
        for item in error.errors()
    )


def _read_config(config_file: Path) -> dict[str, Any]:
    try:
        with open(config_file, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigurationError(
            f"Failed to parse YAML configuration: {config_file}", details=str(e)
        )
    except OSError as e:
        raise ConfigurationError(
            f"Failed to read configuration: {config_file}", details=str(e)
        )

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigurationError(
            f"Configuration must be a mapping of sections: {config_file}",
            details=f"top level is {type(data).__name__}",
        )
    return data


def load_settings(config_path: str | None = None) -> ApplicationSettings:
    """
    Load application settings from YAML file.

    Args:
        config_path: Path to configuration file. If None, uses
            ``SIEVEFORGE_CONFIG`` or ``config.yaml``

    Returns:
        ApplicationSettings instance; defaults when the file does not exist

    Raises:
        ConfigurationError: If the file cannot be parsed or a value is invalid
    """
    if config_path is None:
        config_path = os.getenv(CONFIG_ENV, "config.yaml")

    config_file = Path(config_path)
    if not config_file.exists():
        logger.debug(f"No configuration at {config_file}, using defaults")
        return ApplicationSettings()

    data = _read_config(config_file)
    try:
        settings = ApplicationSettings(**data)
    except pydantic.ValidationError as e:
        raise ConfigurationError(
            f"Invalid configuration: {config_file}", details=_describe(e)
        )

    logger.debug(f"Loaded configuration from {config_file}")
    return settings


def apply_overrides(
    settings: ApplicationSettings,
    *,
    report_format: str | None = None,
    budget: int | None = None,
    max_sieves: int | None = None,
    strict_basis: bool = False,
    include_timing: bool = False,
) -> ApplicationSettings:
    """
    Return a copy of ``settings`` with command-line values layered on top.

    ``None`` and ``False`` leave the loaded value alone, so a flag can switch
    ``strict_basis`` or ``include_timing`` on but never off.

    Raises:
        ConfigurationError: If an override is out of range
    """
    data = settings.model_dump()
    if report_format is not None:
        data["report"]["format"] = report_format
    if budget is not None:
        data["enumeration"]["budget"] = budget
    if max_sieves is not None:
        data["enumeration"]["max_sieves"] = max_sieves
    if strict_basis:
        data["enumeration"]["strict_basis"] = True
    if include_timing:
        data["report"]["include_timing"] = True

    try:
        return ApplicationSettings.model_validate(data)
    except pydantic.ValidationError as e:
        raise ConfigurationError("Invalid command-line override", details=_describe(e))


def get_settings() -> ApplicationSettings:
    """
    Get singleton settings instance.

    Returns:
        ApplicationSettings instance
    """
    global _settings_instance

    if _settings_instance is None:
        _settings_instance = load_settings()

    return _settings_instance


def use_settings(settings: ApplicationSettings) -> None:
    """Install ``settings`` as the process-wide instance."""
    global _settings_instance
    _settings_instance = settings


def reset_settings() -> None:
    global _settings_instance
    _settings_instance = None


def create_default_config(output_path: str = "config.yaml") -> None:
    """
    Write the default settings as YAML, sections in model order.

    Args:
        output_path: Path where to write the config file
    """
    config_dict = ApplicationSettings().model_dump(mode="json")

    with open(Path(output_path), "w", encoding="utf-8") as f:
        yaml.dump(config_dict, f, default_flow_style=False, sort_keys=False, indent=2)
