"""
Utility functions for sieveforge.
"""

from sieveforge.utils.logging_utils import get_logger, setup_logging

__all__ = [
    "setup_logging",
    "get_logger",
]
