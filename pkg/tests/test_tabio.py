import json
import random
from pathlib import Path

import pytest
from gnss import Atom, ConstraintMode, GNSoftSet, Pair, Triple, comparison_matrix, fixture, null_gnss
from gnss.algebra import gnss_and, gnss_intersection
from gnss.errors import (
    ConstraintViolation,
    DegreeOutOfRange,
    DuplicateObjectId,
    DuplicateParameter,
    EmptyParameterSet,
    EmptyTable,
    MalformedCell,
    MalformedParameter,
    MissingField,
    RaggedRow,
    ShapeMismatch,
    UnknownField,
    UnknownFixture,
)
from gnss.tabio import (
    FIXTURE_NAMES,
    Format,
    diff_tables,
    dumps,
    fixture_text,
    loads,
    parse_csv,
    parse_matrix_csv,
    parse_structured,
    read,
    serialize_csv,
    serialize_matrix_csv,
    serialize_structured,
    sniff,
    write,
)

from strategies import NAMES, random_soft_set

GOLDEN = Path(__file__).parent / "golden"
T = Triple.of

HEADER = "U,bright,cheap\n"


# -- CSV ------------------------------------------------------------------------


def test_parse_table1_cell():
    s = parse_csv(fixture_text("table1"))
    assert s.cell("b1", "bright") == T("0.5", "0.6", "0.3")
    assert s.shape == (5, 4)


def test_parse_tolerates_spacing_and_blank_lines():
    text = 'U, bright ,not cheap\n\nb1,"(0.5,0.6,0.3)",  "( 0.1 , 0.2 , 0.3 )"\n\n'
    s = parse_csv(text)
    assert s.params == (Atom("bright"), Atom("cheap", True))
    assert s.cell("b1", "not cheap") == T("0.1", "0.2", "0.3")


def test_parse_pair_header():
    s = parse_csv('U,bright|costly,(a|b)|not c\nx,"(0, 0, 0)","(1, 0, 0)"\n')
    assert s.params == (Pair(Atom("bright"), Atom("costly")),
                        Pair(Pair(Atom("a"), Atom("b")), Atom("c", True)))


@pytest.mark.parametrize("text, err, row, col", [
    (HEADER + 'b1,"(1.2, 0, 0)","(0, 0, 0)"\n', DegreeOutOfRange, 2, 2),
    (HEADER + 'b1,"(0, 0, 0)","(0.5, 0.6)"\n', MalformedCell, 2, 3),
    (HEADER + 'b1,"(0, 0, 0)","0.5 0.6 0.3"\n', MalformedCell, 2, 3),
    (HEADER + 'b1,"(0, 0, 0)","(0.12345, 0, 0)"\n', MalformedCell, 2, 3),
    (HEADER + 'b1,"(0, 0, 0)","(x, 0, 0)"\n', MalformedCell, 2, 3),
    (HEADER + 'b1,"(0, 0, 0)"\n', RaggedRow, 2, None),
    (HEADER + 'b1,"(0, 0, 0)","(0, 0, 0)","(0, 0, 0)"\n', RaggedRow, 2, None),
    (HEADER + 'b1,"(0, 0, 0)","(0, 0, 0)"\nb1,"(0, 0, 0)","(0, 0, 0)"\n', DuplicateObjectId, 3, 1),
    (HEADER + 'b1,"(0.6, 0.7, 0.8)","(0, 0, 0)"\n', ConstraintViolation, 2, 2),
    ('U,a|b|c\nb1,"(0, 0, 0)"\n', MalformedParameter, 1, 2),
    ('V,a\nb1,"(0, 0, 0)"\n', MalformedCell, 1, 1),
    ('U,a,a\nb1,"(0, 0, 0)","(0, 0, 0)"\n', DuplicateParameter, 1, None),
    ("U\nb1\n", EmptyParameterSet, 1, None),
    (HEADER, EmptyTable, 1, None),
])
def test_parse_errors_carry_location(text, err, row, col):
    with pytest.raises(err) as exc:
        parse_csv(text)
    assert exc.value.row == row
    assert exc.value.col == col


def test_parse_empty():
    with pytest.raises(EmptyTable):
        parse_csv(b"")
    with pytest.raises(EmptyTable):
        parse_csv("\n\n")


def test_parse_mode_switch():
    text = HEADER + 'b1,"(0.6, 0.7, 0.8)","(0.3, 0.5, 0.4)"\n'
    s = parse_csv(text, ConstraintMode.NEUTROSOPHIC_ONLY)
    assert s.cell("b1", "bright") == T("0.6", "0.7", "0.8")
    with pytest.raises(ConstraintViolation):
        parse_csv(HEADER + 'b1,"(0.1, 0.1, 0.1)","(0.3, 0.5, 0.4)"\n', ConstraintMode.GNS_SUM_LITERAL)


def test_serialize_golden_table10():
    assert serialize_csv(fixture("table10")) == (GOLDEN / "table10.gnss.csv").read_bytes()


def test_serialize_null():
    out = serialize_csv(null_gnss(["x", "y"], ["a"])).decode()
    assert out == 'U,a\nx,"(0, 0, 0)"\ny,"(0, 0, 0)"\n'


def test_serialize_minimal_digits():
    s = GNSoftSet.from_rows(["x"], ["a"], [[("0.5000", "1.0", "0.1230")]])
    assert serialize_csv(s).decode().splitlines()[1] == 'x,"(0.5, 1, 0.123)"'


@pytest.mark.parametrize("name", [n for n in FIXTURE_NAMES if n not in ("table11", "scores")])
def test_fixture_serialization_is_a_fixed_point(name):
    s = fixture(name)
    once = serialize_csv(s)
    assert serialize_csv(parse_csv(once)) == once
    assert parse_csv(once) == s


def random_key(rng, depth=0):
    if depth < 2 and rng.random() < 0.3:
        return Pair(random_key(rng, depth + 1), random_key(rng, depth + 1))
    return Atom(rng.choice(NAMES), rng.random() < 0.5)


def random_document(rng):
    n = rng.randint(1, 6)
    keys = []
    while len(keys) < rng.randint(1, 5):
        k = random_key(rng)
        if k not in keys:
            keys.append(k)
    objs = rng.sample(["b1", "b2", "x y", "item-3", "o_4", "Ü5", "b7"], n)
    return random_soft_set(rng, objs, keys)


def test_round_trip_random_csv_and_json():
    rng = random.Random(99)
    for _ in range(500):
        s = random_document(rng)
        csv_bytes = serialize_csv(s)
        assert parse_csv(csv_bytes) == s
        assert serialize_csv(parse_csv(csv_bytes)) == csv_bytes
        js = serialize_structured(s)
        assert parse_structured(js) == s
        assert serialize_structured(parse_structured(js)) == js


# -- structured -------------------------------------------------------------------


def test_structured_golden_parse_and_round_trip():
    s = parse_structured((GOLDEN / "table4.gnss.json").read_bytes())
    assert s == fixture("table4")
    assert parse_structured(serialize_structured(s)) == s


def test_structured_pair_parameters():
    s = gnss_and(fixture("table4"), fixture("table5"))
    doc = json.loads(serialize_structured(s))
    assert doc["parameters"][0] == {
        "name": "bright|costly", "negated": False,
        "pair": [{"name": "bright", "negated": False, "pair": None},
                 {"name": "costly", "negated": False, "pair": None}],
    }
    assert parse_structured(serialize_structured(s)) == s


def _doc(**over):
    doc = {
        "universe": ["b1"],
        "parameters": [{"name": "a", "negated": False, "pair": None}],
        "cells": {"a": {"b1": ["0.5", "0.6", "0.3"]}},
    }
    doc.update(over)
    return json.dumps(doc)


def test_structured_accepts_exact_numbers():
    s = parse_structured(_doc(cells={"a": {"b1": [0.5, 0.6, 0.3]}}))
    assert s.cell("b1", "a") == T("0.5", "0.6", "0.3")


@pytest.mark.parametrize("doc, err, text", [
    (_doc(extra=1), UnknownField, "'extra'"),
    (_doc(parameters=[{"name": "a", "colour": "red"}]), UnknownField, "'colour'"),
    (_doc(cells={"a": {"b1": ["0.5", "0.6"]}}), MalformedCell, "expected [t, i, f]"),
    (_doc(cells={"a": {"b1": ["1.5", "0.6", "0"]}}), DegreeOutOfRange, "outside"),
    (_doc(cells={"a": {}}), RaggedRow, "missing cell"),
    (_doc(cells={"a": {"b1": ["0", "0", "0"]}, "z": {}}), RaggedRow, "undeclared"),
    (_doc(universe=["b1", "b1"]), DuplicateObjectId, "b1"),
    (_doc(parameters=[]), EmptyParameterSet, "empty"),
    (_doc(universe=[]), EmptyTable, "empty"),
    (json.dumps({"universe": ["b1"], "parameters": []}), MissingField, "'cells'"),
    (_doc(cells={"a": {"b1": ["0.6", "0.7", "0.8"]}}), ConstraintViolation, "fails"),
    ("{not json", MalformedCell, "invalid JSON"),
    ("", EmptyTable, "empty"),
])
def test_structured_errors(doc, err, text):
    with pytest.raises(err) as exc:
        parse_structured(doc)
    assert text in str(exc.value)


def test_structured_error_location():
    with pytest.raises(MalformedCell) as exc:
        parse_structured(_doc(cells={"a": {"b1": ["0.5", "0.6"]}}))
    assert (exc.value.row, exc.value.col) == ("b1", "a")


# -- io ------------------------------------------------------------------------------


def test_sniff_and_files(tmp_path):
    s = fixture("table5")
    assert sniff(serialize_structured(s)) is Format.JSON
    assert sniff(serialize_csv(s)) is Format.CSV
    for name in ("t.gnss.csv", "t.gnss.json", "t.txt"):
        write(tmp_path / name, s)
        assert read(tmp_path / name) == s
    assert loads(dumps(s, Format.JSON)) == s
    assert (tmp_path / "t.gnss.json").read_bytes().startswith(b"{")


# -- fixtures --------------------------------------------------------------------------


def test_fixture_examples():
    assert fixture("table10").shape == (5, 5)
    assert fixture("table10").cell("b1", "cheap") == T("0.6", "0.3", "0.4")
    assert fixture("table11").cell("b5", "cheap") == 7
    assert fixture("scores")["b5"] == 17
    assert fixture("ex3_3") == fixture("table1")
    with pytest.raises(UnknownFixture):
        fixture("table12")


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixtures_have_no_gns_min_violations(name):
    obj = fixture(name)
    if isinstance(obj, GNSoftSet):
        assert obj.violations(ConstraintMode.GNS_MIN) == []


def test_matrix_csv_round_trip():
    m = comparison_matrix(fixture("table10"))
    assert parse_matrix_csv(serialize_matrix_csv(m)) == m
    assert serialize_matrix_csv(fixture("table11")) == fixture_text("table11")


# -- diffs -------------------------------------------------------------------------------


def test_diff_identity():
    r = diff_tables(fixture("table4"), fixture("table4"))
    assert r.is_empty and len(r) == 0 and r.compared == 15


def test_diff_intersection_errata():
    r = diff_tables(fixture("table7"), gnss_intersection(fixture("table4"), fixture("table5")))
    assert r.locations == [("b3", "colorful"), ("b4", "colorful")]
    assert r.entries[0].expected == T("0.6", "0.3", "0.4")
    assert r.entries[0].actual == T("0.5", "0.3", "0.4")


def test_diff_matrix_errata():
    r = diff_tables(fixture("table11"), comparison_matrix(fixture("table10")))
    assert set(r.locations) == {("b5", "cheap"), ("b1", "costly")}
    assert r.summary() == "2 of 25 cells differ"


def test_diff_matches_by_name_not_position():
    s = fixture("table6")
    rev = GNSoftSet(s.universe, s.params[::-1], s.columns[::-1])
    assert diff_tables(s, rev).is_empty


def test_diff_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        diff_tables(fixture("table4"), fixture("table5"))
    with pytest.raises(ShapeMismatch):
        diff_tables(fixture("table4"), fixture("table11"))
    with pytest.raises(ShapeMismatch):
        diff_tables(fixture("table1"), fixture("table2"))
