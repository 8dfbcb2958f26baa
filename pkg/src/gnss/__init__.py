"""Generalized neutrosophic soft sets with exact arithmetic.

The main entry points are re-exported here::

    from gnss import fixture, gnss_union, decide

    ranking = decide(fixture("table10"))
    ranking.winners  # ('b4',)
"""

from .algebra import (
    gnss_and,
    gnss_complement,
    gnss_equal,
    gnss_intersection,
    gnss_or,
    gnss_subset,
    gnss_superset,
    gnss_union,
    is_null,
    not_params,
    null_gnss,
)
from .core import (
    Atom,
    ConstraintMode,
    Degree,
    GNSet,
    GNSoftSet,
    Pair,
    ParamKey,
    Triple,
    Universe,
    check_triple,
    degree,
    make_triple,
    negate,
    parse_param,
    triple_complement,
    triple_contains,
    triple_intersection,
    triple_union,
)
from .decision import ComparisonMatrix, Ranking, ScoreVector, comparison_matrix, decide, rank, restrict, scores
from .errors import *  # noqa: F401,F403
from .tabio import diff_tables, fixture, parse_csv, parse_structured, serialize_csv, serialize_structured

__version__ = "0.1.0"
