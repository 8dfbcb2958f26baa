"""JSON document format for soft sets.

::

    {
      "universe": ["b1", "b2"],
      "parameters": [
        {"name": "bright", "negated": false, "pair": null},
        {"name": "bright|costly", "negated": false,
         "pair": [{"name": "bright", ...}, {"name": "costly", ...}]}
      ],
      "cells": {"bright": {"b1": ["0.5", "0.6", "0.3"], ...}, ...}
    }

Degrees are decimal strings. Plain JSON numbers are also accepted on input
and read exactly (no binary float round trip). A pair's ``name`` is its
label and must agree with its components.
"""

from __future__ import annotations

import json
from decimal import Decimal

from ..core import (
    Atom,
    ConstraintMode,
    Degree,
    GNSet,
    GNSoftSet,
    Pair,
    ParamKey,
    Triple,
    Universe,
)
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
    MissingField,
    RaggedRow,
    UnknownField,
)

TOP_FIELDS = ("universe", "parameters", "cells")
PARAM_FIELDS = ("name", "negated", "pair")


def param_to_obj(key: ParamKey) -> dict:
    if isinstance(key, Pair):
        return {"name": key.label, "negated": False,
                "pair": [param_to_obj(key.left), param_to_obj(key.right)]}
    return {"name": key.name, "negated": key.negated, "pair": None}


def param_from_obj(obj, where: str = "parameters") -> ParamKey:
    if not isinstance(obj, dict):
        raise MalformedParameter(f"{where}: expected an object, found {obj!r}")
    for k in obj:
        if k not in PARAM_FIELDS:
            raise UnknownField(f"{where}: unknown field {k!r}")
    pair = obj.get("pair")
    negated = obj.get("negated", False)
    if not isinstance(negated, bool):
        raise MalformedParameter(f"{where}: 'negated' must be true or false")
    if pair is not None:
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedParameter(f"{where}: 'pair' must list exactly two parameters")
        if negated:
            raise MalformedParameter(f"{where}: negate pair components, not the pair")
        key = Pair(param_from_obj(pair[0], f"{where}.pair[0]"), param_from_obj(pair[1], f"{where}.pair[1]"))
        if "name" in obj and obj["name"] is not None and obj["name"] != key.label:
            raise MalformedParameter(f"{where}: name {obj['name']!r} does not match pair {key.label!r}")
        return key
    if "name" not in obj:
        raise MissingField(f"{where}: missing field 'name'")
    name = obj["name"]
    try:
        return Atom(name, negated)
    except (InvalidToken, TypeError) as e:
        raise MalformedParameter(f"{where}: {e}") from None


def _degree(v) -> Degree:
    if isinstance(v, str):
        return Degree.parse(v)
    if isinstance(v, Decimal):
        return Degree.from_decimal(v)
    if isinstance(v, int) and not isinstance(v, bool):
        return Degree.from_decimal(Decimal(v))
    raise MalformedCell(f"degree must be a decimal string, found {v!r}")


def parse_structured(data: bytes | str, mode: ConstraintMode = ConstraintMode.GNS_MIN) -> GNSoftSet:
    """Parse a JSON soft-set document.

    Error locations use object and parameter names: ``row`` is the object id
    and ``col`` the parameter label.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8-sig")
        except UnicodeDecodeError as e:
            raise MalformedCell(f"input is not UTF-8: {e}") from None
    if not data.strip():
        raise EmptyTable("empty document")
    try:
        doc = json.loads(data, parse_float=Decimal)
    except json.JSONDecodeError as e:
        raise MalformedCell(f"invalid JSON: {e.msg}", row=e.lineno, col=e.colno) from None
    if not isinstance(doc, dict):
        raise MalformedCell("top level must be an object")
    for k in doc:
        if k not in TOP_FIELDS:
            raise UnknownField(f"unknown field {k!r}")
    for k in TOP_FIELDS:
        if k not in doc:
            raise MissingField(f"missing field {k!r}")

    objects = doc["universe"]
    if not isinstance(objects, list) or not all(isinstance(o, str) for o in objects):
        raise MalformedCell("'universe' must be an array of strings")
    if not objects:
        raise EmptyTable("'universe' is empty")
    if len(set(objects)) != len(objects):
        dup = next(o for o in objects if objects.count(o) > 1)
        raise DuplicateObjectId(f"object {dup!r} appears twice", row=dup)
    try:
        u = Universe(tuple(objects))
    except InvalidToken as e:
        raise MalformedCell(f"'universe': {e.message}") from None

    plist = doc["parameters"]
    if not isinstance(plist, list):
        raise MalformedParameter("'parameters' must be an array")
    if not plist:
        raise EmptyParameterSet("'parameters' is empty")
    keys = [param_from_obj(p, f"parameters[{n}]") for n, p in enumerate(plist)]
    if len(set(keys)) != len(keys):
        dup = next(k for k in keys if keys.count(k) > 1)
        raise DuplicateParameter(f"parameter {dup.label!r} appears twice")

    cells = doc["cells"]
    if not isinstance(cells, dict):
        raise MalformedCell("'cells' must be an object")
    labels = {k.label for k in keys}
    for label in cells:
        if label not in labels:
            raise RaggedRow(f"'cells' has an entry for undeclared parameter {label!r}", col=label)
    columns = []
    for key in keys:
        col = cells.get(key.label)
        if not isinstance(col, dict):
            raise RaggedRow(f"no cells for parameter {key.label!r}", col=key.label)
        extra = [o for o in col if o not in u]
        if extra:
            raise RaggedRow(f"cells for unknown object {extra[0]!r}", row=extra[0], col=key.label)
        triples = []
        for obj in u:
            if obj not in col:
                raise RaggedRow("missing cell", row=obj, col=key.label)
            v = col[obj]
            if not isinstance(v, list) or len(v) != 3:
                raise MalformedCell(f"expected [t, i, f], found {v!r}", row=obj, col=key.label)
            try:
                x = Triple(*(_degree(d) for d in v))
            except GnssError as e:
                raise e.located(obj, key.label) from None
            if not x.satisfies(mode):
                raise ConstraintViolation(f"{x} fails mode {mode.value}", mode=mode, values=x,
                                          row=obj, col=key.label)
            triples.append(x)
        columns.append(GNSet(u, tuple(triples)))
    return GNSoftSet(u, tuple(keys), tuple(columns))


def serialize_structured(s: GNSoftSet) -> bytes:
    doc = {
        "universe": list(s.universe.objects),
        "parameters": [param_to_obj(k) for k in s.params],
        "cells": {
            k.label: {obj: [str(x.t), str(x.i), str(x.f)] for obj, x in col.items()}
            for k, col in zip(s.params, s.columns)
        },
    }
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
