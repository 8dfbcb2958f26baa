"""Reading, writing, fixtures and table diffs."""

from .csv_format import (
    parse_cell,
    parse_csv,
    parse_matrix_csv,
    parse_scores_csv,
    serialize_csv,
    serialize_matrix_csv,
    serialize_scores_csv,
)
from .diff import DiffEntry, DiffReport, diff_tables
from .fixtures import FIXTURE_NAMES, fixture, fixture_text
from .io import Format, dumps, loads, read, sniff, write
from .structured import parse_structured, serialize_structured

__all__ = [
    "DiffEntry",
    "DiffReport",
    "FIXTURE_NAMES",
    "Format",
    "diff_tables",
    "dumps",
    "fixture",
    "fixture_text",
    "loads",
    "parse_cell",
    "parse_csv",
    "parse_matrix_csv",
    "parse_scores_csv",
    "parse_structured",
    "read",
    "serialize_csv",
    "serialize_matrix_csv",
    "serialize_scores_csv",
    "serialize_structured",
    "sniff",
    "write",
]
