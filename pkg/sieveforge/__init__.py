"""
sieveforge

Filters, Grothendieck topologies, convergence and compactness on finite
categories and finite locales, with every definition available as a
checker and every stated law as an executable test.
"""

__version__ = "0.1.0"
__license__ = "MIT"

from sieveforge.core.exceptions import (
    ConfigurationError,
    SieveForgeError,
    ValidationError,
)

__all__ = [
    "__version__",
    "__license__",
    "SieveForgeError",
    "ValidationError",
    "ConfigurationError",
]
