"""Soft-set level operations: containment, equality, complement, null sets,
union, intersection and the AND / OR product operations.

Binary operations require both operands to share an identical universe (same
ids in the same order) and raise :class:`~gnss.errors.UniverseMismatch`
otherwise. Results list parameters in a deterministic order, left operand
first.
"""

from __future__ import annotations

from typing import Callable, Iterable, Sequence

from .core import (
    ZERO_TRIPLE,
    GNSet,
    GNSoftSet,
    ParamKey,
    Pair,
    Triple,
    Universe,
    check_params,
    triple_complement,
    triple_contains,
    triple_intersection,
    triple_union,
)
from .errors import EmptyParameterOverlap, EmptyParameterSet, UniverseMismatch

__all__ = [
    "gnss_subset",
    "gnss_superset",
    "gnss_equal",
    "not_params",
    "gnss_complement",
    "null_gnss",
    "is_null",
    "gnss_union",
    "gnss_intersection",
    "gnss_and",
    "gnss_or",
]


def _common_universe(a: GNSoftSet, b: GNSoftSet) -> Universe:
    if a.universe != b.universe:
        raise UniverseMismatch(
            f"universes differ: {list(a.universe.objects)} vs {list(b.universe.objects)}"
        )
    return a.universe


def _combine(u: Universe, x: GNSet, y: GNSet, op: Callable[[Triple, Triple], Triple]) -> GNSet:
    return GNSet(u, tuple(map(op, x.cells, y.cells)))


def gnss_subset(a: GNSoftSet, b: GNSoftSet) -> bool:
    """True when every parameter of ``a`` is in ``b`` and each approximation
    of ``a`` is contained cell by cell in the matching one of ``b``."""
    _common_universe(a, b)
    if not all(p in b for p in a.params):
        return False
    for key, col in zip(a.params, a.columns):
        other = b[key]
        if not all(map(triple_contains, col.cells, other.cells)):
            return False
    return True


def gnss_superset(a: GNSoftSet, b: GNSoftSet) -> bool:
    return gnss_subset(b, a)


def gnss_equal(a: GNSoftSet, b: GNSoftSet) -> bool:
    """Mutual containment; parameter order does not matter."""
    return gnss_subset(a, b) and gnss_subset(b, a)


def not_params(params: Iterable[ParamKey]) -> tuple[ParamKey, ...]:
    return tuple(p.negate() for p in params)


def gnss_complement(a: GNSoftSet) -> GNSoftSet:
    """Negate every parameter and swap truth with falsity in every cell."""
    cols = tuple(GNSet(a.universe, tuple(map(triple_complement, col.cells))) for col in a.columns)
    return GNSoftSet(a.universe, not_params(a.params), cols)


def null_gnss(universe: Universe | Sequence[str], params: Iterable[ParamKey | str]) -> GNSoftSet:
    u = universe if isinstance(universe, Universe) else Universe(tuple(universe))
    keys = check_params(params)
    if not keys:
        raise EmptyParameterSet("a null soft set needs at least one parameter")
    zero = GNSet(u, (ZERO_TRIPLE,) * len(u))
    return GNSoftSet(u, keys, (zero,) * len(keys))


def is_null(a: GNSoftSet) -> bool:
    return all(x == ZERO_TRIPLE for col in a.columns for x in col.cells)


def gnss_union(a: GNSoftSet, b: GNSoftSet) -> GNSoftSet:
    """Union over A ∪ B.

    A parameter present on one side only keeps that side's approximation;
    shared parameters combine cell-wise with (max t, min i, min f).
    """
    u = _common_universe(a, b)
    keys = list(a.params)
    cols = []
    for key, col in zip(a.params, a.columns):
        cols.append(_combine(u, col, b[key], triple_union) if key in b else col)
    for key, col in zip(b.params, b.columns):
        if key not in a:
            keys.append(key)
            cols.append(col)
    return GNSoftSet(u, tuple(keys), tuple(cols))


def gnss_intersection(a: GNSoftSet, b: GNSoftSet) -> GNSoftSet:
    """Intersection over A ∩ B with (min t, min i, max f).

    Raises:
        EmptyParameterOverlap: A and B share no parameter.
    """
    u = _common_universe(a, b)
    keys = tuple(k for k in a.params if k in b)
    if not keys:
        raise EmptyParameterOverlap("the parameter sets do not overlap")
    cols = tuple(_combine(u, a[k], b[k], triple_intersection) for k in keys)
    return GNSoftSet(u, keys, cols)


def _product(a: GNSoftSet, b: GNSoftSet, op) -> GNSoftSet:
    u = _common_universe(a, b)
    keys, cols = [], []
    for ka, ca in zip(a.params, a.columns):
        for kb, cb in zip(b.params, b.columns):
            keys.append(Pair(ka, kb))
            cols.append(_combine(u, ca, cb, op))
    return GNSoftSet(u, tuple(keys), tuple(cols))


def gnss_and(a: GNSoftSet, b: GNSoftSet) -> GNSoftSet:
    """``a AND b`` over the product A × B, cell-wise (min t, min i, max f)."""
    return _product(a, b, triple_intersection)


def gnss_or(a: GNSoftSet, b: GNSoftSet) -> GNSoftSet:
    """``a OR b`` over the product A × B, cell-wise (max t, min i, min f)."""
    return _product(a, b, triple_union)
