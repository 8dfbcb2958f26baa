"""CSV reader and canonical writer for soft sets and comparison matrices.

Layout::

    U,bright,not cheap,bright|costly
    b1,"(0.5, 0.6, 0.3)","(0.6, 0.3, 0.5)","(0.6, 0.2, 0.5)"

Rows and columns in error locations are 1-based; the header is row 1 and the
object-id column is col 1.
"""

from __future__ import annotations

import csv
import io
import re

from ..core import (
    ConstraintMode,
    Degree,
    GNSet,
    GNSoftSet,
    Triple,
    Universe,
    check_object_id,
    parse_param,
)
from ..decision import ComparisonMatrix, ScoreVector
from ..errors import (
    ConstraintViolation,
    DuplicateObjectId,
    DuplicateParameter,
    EmptyParameterSet,
    EmptyTable,
    GnssError,
    InvalidToken,
    MalformedCell,
    MalformedParameter,
    RaggedRow,
)

_CELL_RE = re.compile(r"^\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _decode(data: bytes | str) -> str:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as e:
            raise MalformedCell(f"input is not UTF-8: {e}") from None
    return data


def _records(data: bytes | str) -> list[tuple[int, list[str]]]:
    text = _decode(data)
    try:
        rows = list(csv.reader(io.StringIO(text, newline=""), skipinitialspace=True))
    except csv.Error as e:
        raise MalformedCell(f"unreadable CSV: {e}") from None
    # keep 1-based line numbers, drop blank lines
    return [(n, r) for n, r in enumerate(rows, start=1) if any(c.strip() for c in r)]


def _header(records, what: str):
    if not records:
        raise EmptyTable(f"no header line in {what}")
    lineno, head = records[0]
    if head[0].strip() != "U":
        raise MalformedCell(f"header must start with 'U', found {head[0]!r}", row=lineno, col=1)
    keys = []
    for c, name in enumerate(head[1:], start=2):
        try:
            keys.append(parse_param(name.strip()))
        except MalformedParameter as e:
            raise e.located(lineno, c) from None
    if not keys:
        raise EmptyParameterSet("the header lists no parameters", row=lineno)
    if len(set(keys)) != len(keys):
        dup = next(k for k in keys if keys.count(k) > 1)
        raise DuplicateParameter(f"parameter {dup.label!r} appears twice", row=lineno)
    body = records[1:]
    if not body:
        raise EmptyTable(f"{what} has a header but no object rows", row=lineno)
    objects, seen = [], set()
    for n, r in body:
        if len(r) != len(keys) + 1:
            raise RaggedRow(f"expected {len(keys) + 1} fields, found {len(r)}", row=n)
        name = r[0].strip()
        try:
            check_object_id(name)
        except InvalidToken as e:
            raise e.located(n, 1) from None
        if name in seen:
            raise DuplicateObjectId(f"object {name!r} appears twice", row=n, col=1)
        seen.add(name)
        objects.append(name)
    return keys, objects, body


def parse_cell(text: str) -> Triple:
    m = _CELL_RE.match(text.strip())
    if not m:
        raise MalformedCell(f"expected '(t, i, f)', found {text!r}")
    return Triple(*(Degree.parse(g) for g in m.groups()))


def parse_csv(data: bytes | str, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> GNSoftSet:
    """Parse a soft set table.

    Raises:
        MalformedCell, DegreeOutOfRange, DuplicateObjectId, RaggedRow,
        EmptyTable, EmptyParameterSet, MalformedParameter: bad input, with
            the row and column of the first offending field.
        ConstraintViolation: a cell fails ``mode``.
    """
    keys, objects, body = _header(_records(data), "soft set table")
    columns: list[list[Triple]] = [[] for _ in keys]
    for n, r in body:
        for c, text in enumerate(r[1:], start=2):
            try:
                x = parse_cell(text)
            except GnssError as e:
                raise e.located(n, c) from None
            if not x.satisfies(mode):
                raise ConstraintViolation(
                    f"{x} fails mode {mode.value}", mode=mode, values=x, row=n, col=c
                )
            columns[c - 2].append(x)
    u = Universe(tuple(objects))
    return GNSoftSet(u, tuple(keys), tuple(GNSet(u, tuple(col)) for col in columns))


def _write(rows) -> bytes:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().encode("utf-8")


def serialize_csv(s: GNSoftSet) -> bytes:
    rows = [["U", *(k.label for k in s.params)]]
    for obj, row in zip(s.universe.objects, s.rows()):
        rows.append([obj, *(str(x) for x in row)])
    return _write(rows)


def parse_matrix_csv(data: bytes | str) -> ComparisonMatrix:
    keys, objects, body = _header(_records(data), "matrix")
    cells = []
    for n, r in body:
        row = []
        for c, text in enumerate(r[1:], start=2):
            if not _INT_RE.match(text.strip()):
                raise MalformedCell(f"expected an integer, found {text!r}", row=n, col=c)
            row.append(int(text))
        cells.append(row)
    return ComparisonMatrix(tuple(objects), tuple(keys), cells)


def serialize_matrix_csv(m: ComparisonMatrix) -> bytes:
    rows = [["U", *(k.label for k in m.cols)]]
    for obj, row in zip(m.rows, m.cells.tolist()):
        rows.append([obj, *row])
    return _write(rows)


def parse_scores_csv(data: bytes | str) -> ScoreVector:
    records = _records(data)
    if not records:
        raise EmptyTable("no header line in score table")
    lineno, head = records[0]
    if [h.strip() for h in head] != ["U", "score"]:
        raise MalformedCell(f"score header must be 'U,score', found {head!r}", row=lineno)
    objects, values = [], []
    for n, r in records[1:]:
        if len(r) != 2:
            raise RaggedRow(f"expected 2 fields, found {len(r)}", row=n)
        if not _INT_RE.match(r[1].strip()):
            raise MalformedCell(f"expected an integer, found {r[1]!r}", row=n, col=2)
        objects.append(check_object_id(r[0].strip()))
        values.append(int(r[1]))
    return ScoreVector(tuple(objects), values)


def serialize_scores_csv(sv: ScoreVector) -> bytes:
    return _write([["U", "score"], *([o, int(v)] for o, v in zip(sv.objects, sv.values))])
