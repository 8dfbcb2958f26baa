"""Exact membership degrees, neutrosophic triples and soft-set containers.

Degrees are stored as integers on a fixed 1/10000 grid so every comparison
in the library is an exact integer comparison. A :class:`Triple` bundles the
truth, indeterminacy and falsity degrees of one object; a :class:`GNSet` maps
every object of a :class:`Universe` to a triple; a :class:`GNSoftSet` maps
each parameter key to a :class:`GNSet`.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from decimal import Decimal
from fractions import Fraction
from operator import itemgetter
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .errors import (
    ConstraintViolation,
    DegreeOutOfRange,
    DuplicateObjectId,
    DuplicateParameter,
    InvalidToken,
    MalformedCell,
    MalformedParameter,
    UnknownParameter,
)

SCALE = 10_000
HALF = SCALE // 2
FRACTION_DIGITS = 4

_DECIMAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


class Degree(int):
    """A membership degree in [0, 1], held as an integer count of 1/10000.

    ``Degree(5000)`` is the degree 0.5. Use :func:`degree` or
    :meth:`Degree.parse` to build one from a decimal value.

    >>> Degree.parse("0.25")
    Degree('0.25')
    >>> str(Degree(10000))
    '1'
    """

    __slots__ = ()

    def __new__(cls, value: int) -> "Degree":
        if isinstance(value, Degree):
            return value
        if not isinstance(value, int) or isinstance(value, bool):
            raise TypeError(f"Degree takes a scaled integer, got {type(value).__name__}")
        if not 0 <= value <= SCALE:
            raise DegreeOutOfRange(f"degree {Fraction(value, SCALE)} is outside [0, 1]")
        return super().__new__(cls, value)

    @classmethod
    def parse(cls, text: str) -> "Degree":
        """Parse a decimal string with at most four fractional digits."""
        s = text.strip()
        if not _DECIMAL_RE.match(s):
            raise MalformedCell(f"not a decimal number: {text!r}")
        return cls.from_decimal(Decimal(s), text)

    @classmethod
    def from_decimal(cls, value: Decimal, text: str | None = None) -> "Degree":
        shown = text if text is not None else str(value)
        if not value.is_finite():
            raise MalformedCell(f"not a finite number: {shown!r}")
        if value < 0 or value > 1:
            raise DegreeOutOfRange(f"degree {shown.strip()} is outside [0, 1]")
        scaled = value * SCALE
        if scaled != scaled.to_integral_value():
            raise MalformedCell(f"more than {FRACTION_DIGITS} fractional digits: {shown!r}")
        return cls(int(scaled))

    @property
    def fraction(self) -> Fraction:
        return Fraction(int(self), SCALE)

    def __str__(self) -> str:
        whole, frac = divmod(int(self), SCALE)
        if frac == 0:
            return str(whole)
        return f"{whole}.{frac:04d}".rstrip("0")

    def __repr__(self) -> str:
        return f"Degree({str(self)!r})"


ZERO = Degree(0)
ONE = Degree(SCALE)

DegreeLike = Union[Degree, str, Decimal, Fraction, float, int]


def degree(value: DegreeLike) -> Degree:
    """Coerce a real-valued number (not a scaled integer) to a :class:`Degree`.

    Accepts decimal strings, ``Decimal``, ``Fraction``, floats with a short
    exact decimal form, and the plain integers 0 and 1.
    """
    if isinstance(value, Degree):
        return value
    if isinstance(value, str):
        return Degree.parse(value)
    if isinstance(value, bool):
        raise TypeError("bool is not a degree")
    if isinstance(value, Decimal):
        return Degree.from_decimal(value)
    if isinstance(value, int):
        return Degree.from_decimal(Decimal(value))
    if isinstance(value, float):
        return Degree.from_decimal(Decimal(repr(value)))
    if isinstance(value, Fraction):
        scaled = value * SCALE
        if not 0 <= value <= 1:
            raise DegreeOutOfRange(f"degree {value} is outside [0, 1]")
        if scaled.denominator != 1:
            raise MalformedCell(f"{value} is not on the 1/{SCALE} grid")
        return Degree(int(scaled))
    raise TypeError(f"cannot make a degree from {type(value).__name__}")


class ConstraintMode(enum.Enum):
    """Which extra condition a triple must meet beyond the [0, 1] ranges.

    ``GNS_MIN`` (the default) asks for min(t, i, f) <= 0.5. ``GNS_SUM_LITERAL``
    asks for t + i + f <= 0.5. ``NEUTROSOPHIC_ONLY`` adds nothing.
    """

    GNS_MIN = "min"
    GNS_SUM_LITERAL = "sum-literal"
    NEUTROSOPHIC_ONLY = "none"


class Triple(tuple):
    """Truth, indeterminacy and falsity degrees of one object.

    An immutable 3-tuple of :class:`Degree` with named accessors ``t``, ``i``
    and ``f``. Components that are not already degrees go through
    :func:`degree`.
    """

    __slots__ = ()

    def __new__(cls, t: DegreeLike, i: DegreeLike, f: DegreeLike) -> "Triple":
        return tuple.__new__(cls, (
            t if type(t) is Degree else degree(t),
            i if type(i) is Degree else degree(i),
            f if type(f) is Degree else degree(f),
        ))

    t = property(itemgetter(0))
    i = property(itemgetter(1))
    f = property(itemgetter(2))

    @classmethod
    def of(cls, t: DegreeLike, i: DegreeLike, f: DegreeLike) -> "Triple":
        return cls(t, i, f)

    def satisfies(self, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> bool:
        # t + i + f <= 3 always holds given the Degree bounds
        if mode is ConstraintMode.GNS_MIN:
            return min(self) <= HALF
        if mode is ConstraintMode.GNS_SUM_LITERAL:
            return sum(self) <= HALF
        return True

    def __getnewargs__(self):
        return tuple(self)

    def __repr__(self) -> str:
        return f"Triple(t={self[0]!r}, i={self[1]!r}, f={self[2]!r})"

    def __str__(self) -> str:
        return f"({self[0]}, {self[1]}, {self[2]})"


def _raw_triple(t: Degree, i: Degree, f: Degree) -> Triple:
    # skips coercion; callers pass Degree instances only
    return tuple.__new__(Triple, (t, i, f))


ZERO_TRIPLE = Triple(ZERO, ZERO, ZERO)


def make_triple(t: DegreeLike, i: DegreeLike, f: DegreeLike,
                mode: ConstraintMode = ConstraintMode.GNS_MIN) -> Triple:
    """Build a triple and check it against ``mode``.

    Raises:
        DegreeOutOfRange: a component lies outside [0, 1].
        ConstraintViolation: the triple fails the selected mode.
    """
    x = Triple.of(t, i, f)
    check_triple(x, mode)
    return x


def check_triple(x: Triple, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> Triple:
    if not x.satisfies(mode):
        rule = "min(t, i, f) <= 0.5" if mode is ConstraintMode.GNS_MIN else "t + i + f <= 0.5"
        raise ConstraintViolation(f"{x} violates {rule} (mode {mode.value})", mode=mode, values=x)
    return x


def triple_complement(x: Triple) -> Triple:
    """Swap truth and falsity."""
    t, i, f = x
    return _raw_triple(f, i, t)


def triple_union(a: Triple, b: Triple) -> Triple:
    """(max t, min i, min f). Also the OR combinator."""
    at, ai, af = a
    bt, bi, bf = b
    return _raw_triple(at if at >= bt else bt, ai if ai <= bi else bi, af if af <= bf else bf)


def triple_intersection(a: Triple, b: Triple) -> Triple:
    """(min t, min i, max f). Also the AND combinator."""
    at, ai, af = a
    bt, bi, bf = b
    return _raw_triple(at if at <= bt else bt, ai if ai <= bi else bi, af if af >= bf else bf)


def triple_contains(a: Triple, b: Triple) -> bool:
    """True when ``a`` is contained in ``b``.

    Truth may only grow from ``a`` to ``b``; indeterminacy and falsity may
    only shrink.
    """
    return a[0] <= b[0] and a[1] >= b[1] and a[2] >= b[2]


# -- tokens -------------------------------------------------------------------

_OBJECT_FORBIDDEN = set(',()"\n\r')
_PARAM_FORBIDDEN = set(',()|"\n\r')


def check_object_id(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise InvalidToken(f"object id must be a non-empty string, got {name!r}")
    if name != name.strip():
        raise InvalidToken(f"object id {name!r} has surrounding whitespace")
    if _OBJECT_FORBIDDEN & set(name):
        raise InvalidToken(f"object id {name!r} contains a forbidden character")
    return name


def check_param_name(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise InvalidToken(f"parameter name must be a non-empty string, got {name!r}")
    if name != name.strip():
        raise InvalidToken(f"parameter name {name!r} has surrounding whitespace")
    if _PARAM_FORBIDDEN & set(name):
        raise InvalidToken(f"parameter name {name!r} contains a forbidden character")
    if name == "not" or name.startswith("not "):
        raise InvalidToken(f"parameter name {name!r} collides with the negation prefix")
    return name


@dataclass(frozen=True)
class Universe:
    """Ordered, duplicate-free list of object ids."""

    objects: tuple[str, ...]
    _index: Mapping[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        objs = tuple(self.objects)
        index: dict[str, int] = {}
        for k, name in enumerate(objs):
            check_object_id(name)
            if name in index:
                raise DuplicateObjectId(f"object {name!r} appears twice")
            index[name] = k
        object.__setattr__(self, "objects", objs)
        object.__setattr__(self, "_index", index)

    def __len__(self) -> int:
        return len(self.objects)

    def __iter__(self) -> Iterator[str]:
        return iter(self.objects)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"object {name!r} is not in the universe") from None


# -- parameter keys -------------------------------------------------------------


@dataclass(frozen=True)
class Atom:
    """A named parameter, possibly negated ("not bright")."""

    name: str
    negated: bool = False

    def __post_init__(self):
        check_param_name(self.name)

    def negate(self) -> "Atom":
        return Atom(self.name, not self.negated)

    @property
    def label(self) -> str:
        return f"not {self.name}" if self.negated else self.name

    def __invert__(self) -> "Atom":
        return self.negate()

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Pair:
    """A product parameter (left, right) as produced by AND / OR."""

    left: "ParamKey"
    right: "ParamKey"

    def negate(self) -> "Pair":
        return Pair(self.left.negate(), self.right.negate())

    @property
    def label(self) -> str:
        return f"{_group(self.left)}|{_group(self.right)}"

    def __invert__(self) -> "Pair":
        return self.negate()

    def __str__(self) -> str:
        return self.label


ParamKey = Union[Atom, Pair]


def _group(key: ParamKey) -> str:
    return f"({key.label})" if isinstance(key, Pair) else key.label


def negate(key: ParamKey) -> ParamKey:
    return key.negate()


def parse_param(label: str) -> ParamKey:
    """Read a parameter label such as ``not bright`` or ``(a|b)|not c``.

    Nested pairs must be parenthesised; ``a|b|c`` is rejected as ambiguous.
    """
    pos, key = _parse_key(label, 0)
    if pos != len(label):
        raise MalformedParameter(f"unexpected text in parameter {label!r} at offset {pos}")
    return key


def _parse_key(s: str, pos: int) -> tuple[int, ParamKey]:
    pos, left = _parse_term(s, pos)
    if pos < len(s) and s[pos] == "|":
        pos, right = _parse_term(s, pos + 1)
        if pos < len(s) and s[pos] == "|":
            raise MalformedParameter(f"ambiguous pair in {s!r}; parenthesise nested pairs")
        return pos, Pair(left, right)
    return pos, left


def _parse_term(s: str, pos: int) -> tuple[int, ParamKey]:
    if pos < len(s) and s[pos] == "(":
        pos, key = _parse_key(s, pos + 1)
        if pos >= len(s) or s[pos] != ")":
            raise MalformedParameter(f"unbalanced parenthesis in {s!r}")
        if not isinstance(key, Pair):
            raise MalformedParameter(f"parentheses may only group pairs in {s!r}")
        return pos + 1, key
    end = pos
    while end < len(s) and s[end] not in "|()":
        end += 1
    text = s[pos:end]
    negated = False
    if text.startswith("not "):
        negated, text = True, text[4:]
    try:
        return end, Atom(text, negated)
    except InvalidToken as e:
        raise MalformedParameter(f"bad parameter {s!r}: {e.message}") from None


def as_key(key: ParamKey | str) -> ParamKey:
    return parse_param(key) if isinstance(key, str) else key


def check_params(params: Iterable[ParamKey | str]) -> tuple[ParamKey, ...]:
    keys = tuple(as_key(p) for p in params)
    seen: set[ParamKey] = set()
    for k in keys:
        if k in seen:
            raise DuplicateParameter(f"parameter {k.label!r} appears twice")
        seen.add(k)
    return keys


# -- containers -----------------------------------------------------------------


@dataclass(frozen=True)
class GNSet:
    """Total map from the objects of a universe to triples."""

    universe: Universe
    cells: tuple[Triple, ...]

    def __post_init__(self):
        cells = tuple(self.cells)
        if len(cells) != len(self.universe):
            raise ValueError(f"{len(cells)} triples for a universe of {len(self.universe)} objects")
        for c in cells:
            if not isinstance(c, Triple):
                raise TypeError(f"expected Triple, got {type(c).__name__}")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def from_mapping(cls, universe: Universe, entries: Mapping[str, Triple]) -> "GNSet":
        missing = [x for x in universe if x not in entries]
        if missing:
            raise ValueError(f"no triple for objects {missing}")
        extra = [x for x in entries if x not in universe]
        if extra:
            raise ValueError(f"objects {extra} are not in the universe")
        return cls(universe, tuple(entries[x] for x in universe))

    @property
    def entries(self) -> dict[str, Triple]:
        return dict(zip(self.universe.objects, self.cells))

    def __getitem__(self, obj: str) -> Triple:
        return self.cells[self.universe.index(obj)]

    def items(self) -> Iterator[tuple[str, Triple]]:
        return zip(self.universe.objects, self.cells)


@dataclass(frozen=True)
class GNSoftSet:
    """A parameterised family of GNSets over one universe.

    ``columns[j]`` is the approximation for ``params[j]``. Parameter order is
    part of the value: it fixes column order on output. Use
    :func:`gnss.algebra.gnss_equal` for order-insensitive comparison.
    """

    universe: Universe
    params: tuple[ParamKey, ...]
    columns: tuple[GNSet, ...]
    _pindex: Mapping[ParamKey, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        params = check_params(self.params)
        columns = tuple(self.columns)
        if len(columns) != len(params):
            raise ValueError(f"{len(columns)} columns for {len(params)} parameters")
        for col in columns:
            if col.universe != self.universe:
                raise ValueError("every column must share the soft set's universe")
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "_pindex", {p: j for j, p in enumerate(params)})

    @classmethod
    def from_rows(cls, objects: Sequence[str] | Universe, params: Sequence[ParamKey | str],
                  rows: Sequence[Sequence[Triple | tuple]]) -> "GNSoftSet":
        """Build from a row-major table: ``rows[i][j]`` is object i under param j.

        Cells may be :class:`Triple` instances or 3-tuples of degree-like
        values.

        >>> s = GNSoftSet.from_rows(["b1"], ["bright"], [[("0.5", "0.6", "0.3")]])
        >>> str(s.cell("b1", "bright"))
        '(0.5, 0.6, 0.3)'
        """
        u = objects if isinstance(objects, Universe) else Universe(tuple(objects))
        keys = check_params(params)
        if len(rows) != len(u):
            raise ValueError(f"{len(rows)} rows for {len(u)} objects")
        grid = []
        for r in rows:
            if len(r) != len(keys):
                raise ValueError(f"row has {len(r)} cells, expected {len(keys)}")
            grid.append([c if isinstance(c, Triple) else Triple.of(*c) for c in r])
        cols = tuple(GNSet(u, tuple(grid[i][j] for i in range(len(u)))) for j in range(len(keys)))
        return cls(u, keys, cols)

    @classmethod
    def from_columns(cls, universe: Universe, table: Mapping[ParamKey | str, GNSet]) -> "GNSoftSet":
        keys = check_params(table.keys())
        return cls(universe, keys, tuple(table.values()))

    @property
    def table(self) -> dict[ParamKey, GNSet]:
        return dict(zip(self.params, self.columns))

    def __contains__(self, key: object) -> bool:
        if isinstance(key, str):
            key = parse_param(key)
        return key in self._pindex

    def __getitem__(self, key: ParamKey | str) -> GNSet:
        k = as_key(key)
        try:
            return self.columns[self._pindex[k]]
        except KeyError:
            raise UnknownParameter(f"parameter {k.label!r} is not in this soft set") from None

    def cell(self, obj: str, key: ParamKey | str) -> Triple:
        return self[key][obj]

    def rows(self) -> list[list[Triple]]:
        return [[col.cells[i] for col in self.columns] for i in range(len(self.universe))]

    def iter_cells(self) -> Iterator[tuple[str, ParamKey, Triple]]:
        for key, col in zip(self.params, self.columns):
            for obj, x in col.items():
                yield obj, key, x

    def violations(self, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> list[tuple[str, ParamKey, Triple]]:
        """Cells failing ``mode``, in column-major order."""
        return [(obj, key, x) for obj, key, x in self.iter_cells() if not x.satisfies(mode)]

    def check(self, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> "GNSoftSet":
        bad = self.violations(mode)
        if bad:
            obj, key, x = bad[0]
            raise ConstraintViolation(
                f"{x} at ({obj}, {key.label}) fails mode {mode.value} ({len(bad)} cell(s) in total)",
                mode=mode, values=x, row=obj, col=key.label,
            )
        return self

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.universe), len(self.params)
