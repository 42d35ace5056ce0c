"""
Pytest configuration and fixtures.
"""

import pytest

from sieveforge.config.models import ApplicationSettings
from sieveforge.config.settings import reset_settings, use_settings
from sieveforge.laws import corpus


@pytest.fixture
def test_settings():
    """Provide small-budget application settings and install them."""
    settings = ApplicationSettings()
    settings.logging.level = "DEBUG"
    settings.laws.random_locales = 3
    settings.laws.random_posets = 3
    settings.laws.pruning_pairs = 10
    settings.laws.basis_samples = 20
    settings.laws.squarefree_limit = 30
    use_settings(settings)
    return settings


@pytest.fixture(autouse=True)
def reset_config(monkeypatch):
    """Reset configuration before each test."""
    monkeypatch.delenv("SIEVEFORGE_CONFIG", raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def chain3():
    """The three-element chain 0 < 1 < 2."""
    return corpus.lattice("CHAIN3")


@pytest.fixture
def d12():
    """Divisors of 12."""
    return corpus.lattice("D12")


@pytest.fixture
def square():
    """The four-element Boolean lattice ⊥ < a, b < ⊤."""
    return corpus.lattice("SQ")


@pytest.fixture
def m3():
    """The diamond M3, a non-distributive lattice."""
    return corpus.lattice("M3")


@pytest.fixture
def twopt():
    """The two-point category with objects 1 and C."""
    return corpus.category("TWOPT")


@pytest.fixture
def j1():
    return corpus.site("J1")


@pytest.fixture
def j3():
    return corpus.site("J3")


@pytest.fixture
def model_path(tmp_path):
    """Write model text to a temporary file and return its path."""

    def write(text: str = corpus.FIXTURE_MODEL, name: str = "model.txt") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
