"""Format detection and whole-file reading and writing."""

from __future__ import annotations

import enum
from pathlib import Path

from ..core import ConstraintMode, GNSoftSet
from .csv_format import parse_csv, serialize_csv
from .structured import parse_structured, serialize_structured


class Format(enum.Enum):
    CSV = "csv"
    JSON = "json"


def sniff(data: bytes | str, path: str | Path | None = None) -> Format:
    """Guess the format from the file name, falling back to the first byte."""
    if path is not None:
        suffix = Path(path).suffix.lower()
        if suffix == ".json":
            return Format.JSON
        if suffix == ".csv":
            return Format.CSV
    head = data.lstrip()[:1] if isinstance(data, str) else data.lstrip(b"\xef\xbb\xbf \t\r\n")[:1]
    return Format.JSON if head in ("{", b"{") else Format.CSV


def loads(data: bytes | str, fmt: Format | None = None,
          mode: ConstraintMode = ConstraintMode.GNS_MIN) -> GNSoftSet:
    fmt = fmt or sniff(data)
    return parse_structured(data, mode) if fmt is Format.JSON else parse_csv(data, mode)


def dumps(s: GNSoftSet, fmt: Format = Format.CSV) -> bytes:
    return serialize_structured(s) if fmt is Format.JSON else serialize_csv(s)


def read(path: str | Path, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> GNSoftSet:
    data = Path(path).read_bytes()
    return loads(data, sniff(data, path), mode)


def write(path: str | Path, s: GNSoftSet, fmt: Format | None = None) -> None:
    fmt = fmt or sniff(b"", path)
    Path(path).write_bytes(dumps(s, fmt))
