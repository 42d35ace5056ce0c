"""Executable laws, the fixture corpus and the law runner."""

from sieveforge.laws.corpus import FIXTURE_MODEL, fixture_model, random_lattice, random_lattices
from sieveforge.laws.registry import LAWS, Law, LawContext, LawOutcome, select_laws
from sieveforge.laws.run import LawRun, LawStatus
from sieveforge.laws.runner import LawTracker, run_law, run_laws

__all__ = [
    "FIXTURE_MODEL",
    "LAWS",
    "Law",
    "LawContext",
    "LawOutcome",
    "LawRun",
    "LawStatus",
    "LawTracker",
    "fixture_model",
    "random_lattice",
    "random_lattices",
    "run_law",
    "run_laws",
    "select_laws",
]
