"""Model files and command reports."""

from sieveforge.model.format import (
    ASSIGNMENT_KINDS,
    BlockKind,
    ModelDocument,
    ModelFile,
    assignment_document,
    category_document,
    lattice_document,
    load_model,
    parse_documents,
    parse_model,
    resolve_documents,
    serialize_document,
    serialize_model,
)
from sieveforge.model.reports import Report, ReportEntry, replay_command

__all__ = [
    "ASSIGNMENT_KINDS",
    "BlockKind",
    "ModelDocument",
    "ModelFile",
    "Report",
    "ReportEntry",
    "assignment_document",
    "category_document",
    "lattice_document",
    "load_model",
    "parse_documents",
    "parse_model",
    "replay_command",
    "resolve_documents",
    "serialize_document",
    "serialize_model",
]
