"""Exception hierarchy shared by every gnss module.

All errors derive from :class:`GnssError` (itself a ``ValueError``). Errors
raised while reading a document carry an optional location, ``row`` and
``col``, which are 1-based line/column numbers for CSV input and
object/parameter names for structured input.
"""

from __future__ import annotations

import copy


class GnssError(ValueError):
    def __init__(self, message: str, *, row: int | str | None = None, col: int | str | None = None):
        self.message = message
        self.row = row
        self.col = col
        super().__init__(self._render())

    def _render(self) -> str:
        if self.row is None and self.col is None:
            return self.message
        where = []
        if self.row is not None:
            where.append(f"row {self.row}")
        if self.col is not None:
            where.append(f"col {self.col}")
        return f"{', '.join(where)}: {self.message}"

    def located(self, row, col=None) -> "GnssError":
        """Return a copy of this error tagged with a location."""
        err = copy.copy(self)
        err.row, err.col = row, col
        err.args = (err._render(),)
        return err

    def __str__(self) -> str:
        return self._render()


class DegreeOutOfRange(GnssError):
    """A membership degree outside [0, 1]."""


class ConstraintViolation(GnssError):
    """A triple that fails the active constraint mode."""

    def __init__(self, message: str, *, mode=None, values=None, **kw):
        self.mode = mode
        self.values = values
        super().__init__(message, **kw)


class InvalidToken(GnssError):
    """An object id or parameter name that is not a legal token."""


class DuplicateObjectId(GnssError):
    pass


class DuplicateParameter(GnssError):
    pass


class UniverseMismatch(GnssError):
    """Binary operation on soft sets over different universes."""


class EmptyParameterSet(GnssError):
    pass


class EmptyParameterOverlap(GnssError):
    """Intersection of soft sets whose parameter sets are disjoint."""


class UnknownParameter(GnssError):
    pass


class UnknownFixture(GnssError):
    pass


class ShapeMismatch(GnssError):
    pass


class ParseError(GnssError):
    """Base class for errors raised by the document readers."""


class MalformedCell(ParseError):
    pass


class MalformedParameter(ParseError):
    pass


class RaggedRow(ParseError):
    pass


class EmptyTable(ParseError):
    pass


class UnknownField(ParseError):
    pass


class MissingField(ParseError):
    pass
