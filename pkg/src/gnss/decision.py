"""Comparison-matrix scoring and winner selection over a soft set.

For object ``i`` and parameter ``j`` the matrix cell is ``a + d - c`` where
``a``, ``d`` and ``c`` count the *other* objects whose truth, indeterminacy
and falsity degrees under ``j`` are less than or equal to those of ``i``.
An object's score is its row sum; the winners are every object reaching the
maximum score.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .core import GNSoftSet, ParamKey, as_key, check_params
from .errors import EmptyParameterSet, UnknownParameter


@dataclass(frozen=True, eq=False)
class ComparisonMatrix:
    rows: tuple[str, ...]
    cols: tuple[ParamKey, ...]
    cells: np.ndarray  # int64, shape (len(rows), len(cols)), read-only

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64).reshape(len(self.rows), len(self.cols))
        cells.setflags(write=False)
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", check_params(self.cols))
        object.__setattr__(self, "cells", cells)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComparisonMatrix):
            return NotImplemented
        return (self.rows == other.rows and self.cols == other.cols
                and np.array_equal(self.cells, other.cells))

    def cell(self, obj: str, key: ParamKey | str) -> int:
        i = self.rows.index(obj)
        j = self.cols.index(as_key(key))
        return int(self.cells[i, j])

    @property
    def shape(self) -> tuple[int, int]:
        return self.cells.shape


@dataclass(frozen=True, eq=False)
class ScoreVector:
    objects: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int64).reshape(len(self.objects))
        values.setflags(write=False)
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "values", values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScoreVector):
            return NotImplemented
        return self.objects == other.objects and np.array_equal(self.values, other.values)

    def __getitem__(self, obj: str) -> int:
        return int(self.values[self.objects.index(obj)])

    def as_dict(self) -> dict[str, int]:
        return {o: int(v) for o, v in zip(self.objects, self.values)}


@dataclass(frozen=True)
class Ranking:
    """Objects ordered by descending score, ties kept in universe order.

    ``groups`` lists tie groups best first, each as ``(score, objects)``;
    ``winners`` is the first group.
    """

    order: tuple[tuple[str, int], ...]
    groups: tuple[tuple[int, tuple[str, ...]], ...]

    @property
    def winners(self) -> tuple[str, ...]:
        return self.groups[0][1] if self.groups else ()

    @property
    def best_score(self) -> int:
        return self.groups[0][0]

    @property
    def choice(self) -> str:
        """A single pick: the first winner in universe order."""
        return self.winners[0]


def restrict(s: GNSoftSet, params: Iterable[ParamKey | str]) -> GNSoftSet:
    """The soft set limited to ``params``, in the order given.

    Raises:
        EmptyParameterSet: ``params`` is empty.
        UnknownParameter: a requested parameter is missing from ``s``.
    """
    keys = check_params(params)
    if not keys:
        raise EmptyParameterSet("choose at least one parameter")
    for k in keys:
        if k not in s:
            raise UnknownParameter(f"parameter {k.label!r} is not in the soft set")
    return GNSoftSet(s.universe, keys, tuple(s[k] for k in keys))


def _degrees(s: GNSoftSet) -> np.ndarray:
    # shape (n, m, 3): object, parameter, component
    return np.array([[tuple(map(int, x)) for x in row] for row in s.rows()],
                    dtype=np.int64).reshape(len(s.universe), len(s.params), 3)


def comparison_matrix(s: GNSoftSet) -> ComparisonMatrix:
    deg = _degrees(s)
    # ge[i, k, j, c]: degree of i >= degree of k for parameter j, component c
    ge = deg[:, None, :, :] >= deg[None, :, :, :]
    counts = ge.sum(axis=1) - 1  # drop the self comparison, always true
    cells = counts[..., 0] + counts[..., 1] - counts[..., 2]
    return ComparisonMatrix(s.universe.objects, s.params, cells)


def scores(m: ComparisonMatrix) -> ScoreVector:
    return ScoreVector(m.rows, m.cells.sum(axis=1))


def rank(sv: ScoreVector) -> Ranking:
    order = sorted(zip(sv.objects, (int(v) for v in sv.values)), key=lambda p: -p[1])
    groups: list[tuple[int, list[str]]] = []
    for obj, score in order:
        if groups and groups[-1][0] == score:
            groups[-1][1].append(obj)
        else:
            groups.append((score, [obj]))
    return Ranking(tuple(order), tuple((sc, tuple(objs)) for sc, objs in groups))


def decide(s: GNSoftSet, params: Sequence[ParamKey | str] | None = None) -> Ranking:
    """Restrict to ``params`` (all of them by default), score, and rank."""
    chosen = restrict(s, s.params if params is None else params)
    return rank(scores(comparison_matrix(chosen)))
