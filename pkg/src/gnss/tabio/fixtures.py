"""The worked examples and tables of the blouse / object data set.

Every fixture is stored exactly as printed, including cells that disagree
with the operations that produced them (``table7`` rows b3 and b4,
``table11`` cells (b5, cheap) and (b1, costly), and the ``scores`` rows for
b1 and b5). Parameter names are lower-cased so that tables describing the
same attribute can be combined.
"""

from __future__ import annotations

from importlib import resources
from typing import Union

from ..core import ConstraintMode, GNSoftSet
from ..decision import ComparisonMatrix, ScoreVector
from ..errors import UnknownFixture
from .csv_format import parse_csv, parse_matrix_csv, parse_scores_csv

Fixture = Union[GNSoftSet, ComparisonMatrix, ScoreVector]

_SOFT_SETS = (
    "table1", "table2", "table3", "table4", "table5", "table6", "table7",
    "table8", "table9", "table10", "ex3_11", "ex3_13",
    "ex3_20_F", "ex3_20_G", "ex3_20_K",
    "ex3_20_FG", "ex3_20_FK", "ex3_20_GK", "ex3_20_lhs", "ex3_20_rhs",
)
_ALIASES = {"ex3_3": "table1"}

FIXTURE_NAMES: tuple[str, ...] = _SOFT_SETS + ("table11", "scores") + tuple(_ALIASES)


def fixture_text(name: str) -> bytes:
    """Raw bytes of the stored fixture file."""
    name = _ALIASES.get(name, name)
    if name in _SOFT_SETS:
        fname = f"{name}.gnss.csv"
    elif name == "table11":
        fname = "table11.matrix.csv"
    elif name == "scores":
        fname = "scores.scores.csv"
    else:
        raise UnknownFixture(f"no fixture named {name!r}; known: {', '.join(FIXTURE_NAMES)}")
    return resources.files(__package__).joinpath("data", fname).read_bytes()


def fixture(name: str) -> Fixture:
    """Load a fixture by name.

    Soft-set fixtures come back as :class:`GNSoftSet`, ``table11`` as a
    :class:`ComparisonMatrix` and ``scores`` as a :class:`ScoreVector`.

    >>> fixture("table10").cell("b1", "cheap")
    Triple(t=Degree('0.6'), i=Degree('0.3'), f=Degree('0.4'))
    """
    data = fixture_text(name)
    name = _ALIASES.get(name, name)
    if name == "table11":
        return parse_matrix_csv(data)
    if name == "scores":
        return parse_scores_csv(data)
    return parse_csv(data, ConstraintMode.GNS_MIN)
