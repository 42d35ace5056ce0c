"""
Tests for configuration system.
"""

import pytest
import yaml

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
from sieveforge.core.exceptions import ConfigurationError


class TestConfigurationModels:
    """Test configuration models."""

    def test_default_application_settings(self):
        """Test default application settings."""
        settings = ApplicationSettings()

        assert settings.enumeration.budget == 2**20
        assert settings.enumeration.strict_basis is False
        assert settings.laws.seed == 42
        assert settings.report.format == "json"

    def test_logging_level_validation(self):
        """Test logging level validation."""
        for level in ["DEBUG", "INFO", "WARNING", "ERROR"]:
            settings = LoggingSettings(level=level)
            assert settings.level == level

        assert LoggingSettings(level="debug").level == "DEBUG"

        with pytest.raises(ValueError):
            LoggingSettings(level="INVALID")

    def test_report_format_validation(self):
        """Test report format validation."""
        assert ReportSettings(format="text").format == "text"

        with pytest.raises(ValueError):
            ReportSettings(format="xml")

    def test_law_bounds(self):
        """Test random lattice size bounds."""
        assert LawSettings(max_random_elements=2).max_random_elements == 2

        with pytest.raises(ValueError):
            LawSettings(max_random_elements=1)
        with pytest.raises(ValueError):
            LawSettings(random_locales=-1)

    def test_validate_assignment(self):
        """Test assignments are validated."""
        settings = ApplicationSettings()
        with pytest.raises(ValueError):
            settings.enumeration.budget = 0

    def test_unknown_keys_rejected(self):
        """Test unknown sections are rejected."""
        with pytest.raises(ValueError):
            ApplicationSettings(server={"name": "x"})

    def test_budget_from_environment(self, monkeypatch):
        """Test enumeration budgets read the environment."""
        monkeypatch.setenv("SIEVEFORGE_BUDGET", "128")
        monkeypatch.setenv("SIEVEFORGE_STRICT_BASIS", "true")

        settings = EnumerationSettings()
        assert settings.budget == 128
        assert settings.strict_basis is True
        assert EnumerationSettings(budget=64).budget == 64


class TestConfigurationLoading:
    """Test configuration loading."""

    def test_load_default_settings(self):
        """Test loading default settings when no config file exists."""
        settings = load_settings("nonexistent.yaml")
        assert isinstance(settings, ApplicationSettings)

    def test_load_yaml(self, tmp_path):
        """Test partial YAML files keep the other defaults."""
        path = tmp_path / "config.yaml"
        path.write_text("laws:\n  seed: 7\nreport:\n  format: text\n", encoding="utf-8")

        settings = load_settings(str(path))
        assert settings.laws.seed == 7
        assert settings.report.format == "text"
        assert settings.enumeration.budget == 2**20

    def test_empty_yaml(self, tmp_path):
        """Test an empty file gives the defaults."""
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        assert load_settings(str(path)) == ApplicationSettings()

    def test_invalid_yaml(self, tmp_path):
        """Test malformed and invalid files."""
        broken = tmp_path / "broken.yaml"
        broken.write_text("laws: [unclosed\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_settings(str(broken))

        invalid = tmp_path / "invalid.yaml"
        invalid.write_text("report:\n  format: xml\n", encoding="utf-8")
        with pytest.raises(ConfigurationError):
            load_settings(str(invalid))

    def test_config_from_environment(self, tmp_path, monkeypatch):
        """Test SIEVEFORGE_CONFIG names the default file."""
        path = tmp_path / "env.yaml"
        path.write_text("laws:\n  seed: 9\n", encoding="utf-8")
        monkeypatch.setenv("SIEVEFORGE_CONFIG", str(path))

        assert load_settings().laws.seed == 9

    def test_settings_singleton(self):
        """Test settings singleton behavior."""
        reset_settings()

        settings1 = get_settings()
        settings2 = get_settings()

        assert settings1 is settings2

        reset_settings()
        assert get_settings() is not settings1

    def test_use_settings(self, test_settings):
        """Test installing an explicit instance."""
        assert get_settings() is test_settings
        assert get_settings().laws.random_locales == 3

    def test_create_default_config(self, tmp_path):
        """Test the written file loads back to the defaults."""
        path = tmp_path / "default.yaml"
        create_default_config(str(path))

        data = yaml.safe_load(path.read_text(encoding="utf-8"))
        assert set(data) == {"enumeration", "laws", "report", "logging"}
        assert load_settings(str(path)) == ApplicationSettings()

    def test_use_settings_replaces_instance(self):
        """Test use_settings overrides a loaded instance."""
        loaded = get_settings()
        replacement = ApplicationSettings()
        use_settings(replacement)
        assert get_settings() is replacement
        assert get_settings() is not loaded

    def test_top_level_must_be_mapping(self, tmp_path):
        """Test a YAML list is rejected with the offending type."""
        path = tmp_path / "list.yaml"
        path.write_text("- laws\n- report\n", encoding="utf-8")
        with pytest.raises(ConfigurationError) as info:
            load_settings(str(path))
        assert "list" in info.value.details

    def test_invalid_value_names_field(self, tmp_path):
        """Test validation errors name the failing field."""
        path = tmp_path / "bad.yaml"
        path.write_text("enumeration:\n  budget: 0\n", encoding="utf-8")
        with pytest.raises(ConfigurationError) as info:
            load_settings(str(path))
        assert "enumeration.budget" in info.value.details


class TestOverrides:
    """Test command-line overrides layered over loaded settings."""

    def test_overrides_applied(self):
        """Test each override lands in its section."""
        base = ApplicationSettings()
        settings = apply_overrides(
            base,
            report_format="text",
            budget=64,
            max_sieves=32,
            strict_basis=True,
            include_timing=True,
        )

        assert settings.report.format == "text"
        assert settings.enumeration.budget == 64
        assert settings.enumeration.max_sieves == 32
        assert settings.enumeration.strict_basis is True
        assert settings.report.include_timing is True
        assert base.enumeration.budget == 2**20

    def test_unset_flags_keep_loaded_values(self, tmp_path):
        """Test None and False leave file values alone."""
        path = tmp_path / "config.yaml"
        path.write_text(
            "enumeration:\n  budget: 99\n  strict_basis: true\nreport:\n  format: text\n",
            encoding="utf-8",
        )
        settings = apply_overrides(load_settings(str(path)))

        assert settings.enumeration.budget == 99
        assert settings.enumeration.strict_basis is True
        assert settings.report.format == "text"

    def test_out_of_range_override(self):
        """Test an invalid override raises ConfigurationError."""
        with pytest.raises(ConfigurationError) as info:
            apply_overrides(ApplicationSettings(), budget=0)
        assert "budget" in info.value.details
