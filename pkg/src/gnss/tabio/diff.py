"""Cell-by-cell comparison of soft sets, comparison matrices and score tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from ..core import GNSoftSet, ParamKey, Triple
from ..decision import ComparisonMatrix, ScoreVector
from ..errors import ShapeMismatch

Table = Union[GNSoftSet, ComparisonMatrix, ScoreVector]


@dataclass(frozen=True)
class DiffEntry:
    obj: str
    param: ParamKey | None  # None for score tables
    expected: Triple | int
    actual: Triple | int

    def __str__(self) -> str:
        where = self.obj if self.param is None else f"{self.obj},{self.param.label}"
        return f"({where}): expected {self.expected}, got {self.actual}"


@dataclass(frozen=True)
class DiffReport:
    entries: tuple[DiffEntry, ...]
    compared: int

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def is_empty(self) -> bool:
        return not self.entries

    @property
    def locations(self) -> list[tuple[str, str | None]]:
        return [(e.obj, None if e.param is None else e.param.label) for e in self.entries]

    def summary(self) -> str:
        return f"{len(self.entries)} of {self.compared} cells differ"


def _cells(t: Table) -> tuple[tuple[str, ...], tuple, dict]:
    if isinstance(t, GNSoftSet):
        cells = {(o, k): x for o, k, x in t.iter_cells()}
        return t.universe.objects, t.params, cells
    if isinstance(t, ComparisonMatrix):
        cells = {(o, k): int(t.cells[i, j]) for i, o in enumerate(t.rows) for j, k in enumerate(t.cols)}
        return t.rows, t.cols, cells
    if isinstance(t, ScoreVector):
        return t.objects, (None,), {(o, None): int(v) for o, v in zip(t.objects, t.values)}
    raise TypeError(f"cannot diff {type(t).__name__}")


def diff_tables(expected: Table, actual: Table) -> DiffReport:
    """Compare two tables of the same kind and shape.

    Rows and columns are matched by name, so the two sides may list them in
    different orders. Entries come out column by column, in the expected
    table's order.

    Raises:
        ShapeMismatch: different kinds of table, or different object or
            parameter sets.
    """
    if type(expected) is not type(actual):
        raise ShapeMismatch(f"cannot compare {type(expected).__name__} with {type(actual).__name__}")
    rows_e, cols_e, cells_e = _cells(expected)
    rows_a, cols_a, cells_a = _cells(actual)
    if set(rows_e) != set(rows_a):
        raise ShapeMismatch(f"objects differ: {list(rows_e)} vs {list(rows_a)}")
    if set(cols_e) != set(cols_a):
        raise ShapeMismatch("parameters differ: "
                            f"{[getattr(c, 'label', c) for c in cols_e]} vs {[getattr(c, 'label', c) for c in cols_a]}")
    entries = []
    for k in cols_e:
        for o in rows_e:
            e, a = cells_e[o, k], cells_a[o, k]
            if e != a:
                entries.append(DiffEntry(o, k, e, a))
    return DiffReport(tuple(entries), len(cells_e))
