import json

import pytest

from finflow import families
from finflow.errors import CycleError, ParseError, SchemaError
from finflow.formats import (parse_poset_json, parse_poset_text, to_dot,
                             write_poset_json, write_poset_text)
from finflow.maps import MonotoneMap
from finflow.report import AnalysisReport, analyze
from finflow.semiflow import Semiflow

EX31_TEXT = """\
E < D
F < D
D < B
D < C
B < A
C < A
"""


def test_parse_text_example():
    p = parse_poset_text(EX31_TEXT)
    # auto-registration order: first appearance
    assert p.labels == ("E", "D", "F", "B", "C", "A")
    covers = {(p.labels[a], p.labels[b]) for a, b in p.covers}
    assert covers == {("E", "D"), ("F", "D"), ("D", "B"), ("D", "C"),
                      ("B", "A"), ("C", "A")}
    q = families.example_3_1()
    from finflow.poset import is_isomorphic
    assert is_isomorphic(p, q)
    assert p.leq(p.index_of("E"), p.index_of("A"))


def test_parse_text_with_declarations_and_comments():
    text = """
# a three-element chain
elements: lo mid hi
lo < mid
mid < hi  # top step
"""
    p = parse_poset_text(text)
    assert p.labels == ("lo", "mid", "hi")
    assert p.height == 2


def test_parse_text_empty_and_errors():
    assert parse_poset_text("").n == 0
    with pytest.raises(CycleError):
        parse_poset_text("a < a")
    with pytest.raises(CycleError):
        parse_poset_text("a < b\nb < a")
    with pytest.raises(ParseError) as err:
        parse_poset_text("a < b\nb <\n")
    assert err.value.lineno == 2
    with pytest.raises(ParseError):
        parse_poset_text("a < b < c")
    with pytest.raises(ParseError):
        parse_poset_text("elements: a a")
    with pytest.raises(ParseError):
        parse_poset_text("a b < c")


def test_text_round_trip():
    for p in (families.example_3_1(), families.antichain(3), families.chain(1),
              families.realization_family(2)):
        assert parse_poset_text(write_poset_text(p)) == p
    assert write_poset_text(families.antichain(0)) == ""


def test_json_round_trip_exact():
    p = families.example_3_1()
    text = write_poset_json(p)
    assert parse_poset_json(text) == p
    again = write_poset_json(parse_poset_json(text))
    assert again == text  # byte-stable

    singleton = parse_poset_json('{"elements": ["x"], "relations": []}')
    assert singleton.n == 1


def test_text_json_text_preserves_order():
    p = parse_poset_text(EX31_TEXT)
    q = parse_poset_json(write_poset_json(p))
    assert q == p
    assert parse_poset_text(write_poset_text(q)) == p


def test_json_schema_errors():
    with pytest.raises(SchemaError):
        parse_poset_json("not json at all {")
    with pytest.raises(SchemaError):
        parse_poset_json('["a"]')
    with pytest.raises(SchemaError):
        parse_poset_json('{"elements": "abc", "relations": []}')
    with pytest.raises(SchemaError):
        parse_poset_json('{"elements": ["a"], "relations": [["a", "b"]]}')
    with pytest.raises(SchemaError):
        parse_poset_json('{"elements": ["a"], "relations": ["a<b"]}')
    with pytest.raises(CycleError):
        parse_poset_json('{"elements": ["a", "b"], "relations": [["a","b"],["b","a"]]}')


def test_to_dot_shapes():
    two = to_dot(families.chain(2))
    assert two.count("->") == 1 and '"c0" -> "c1"' in two
    theta = to_dot(families.antichain(3))
    assert "->" not in theta
    assert "rank=same" in theta


def test_to_dot_semiflow_annotation():
    p = families.example_3_1()
    sf = Semiflow(p, MonotoneMap.from_moves(p, {"A": "D", "B": "D", "C": "D"}))
    out = to_dot(p, annotate=sf)
    for src in "ABC":
        assert f'"{src}" -> "D" [style=dashed, constraint=false];' in out
    assert out.count("dashed") == 3


def test_report_round_trip():
    rep = analyze(families.example_3_1())
    clone = AnalysisReport.from_json(rep.to_json())
    assert clone == rep
    data = rep.to_dict()
    assert data["schema"] == 1
    assert data["s_f"] == 7
    assert len(data["nontrivial_semiflows"]) == 6
    assert data["down_beat_points"] == ["B", "C"]
    assert all(c["satisfied"] for c in data["bounds_checked"])


def test_report_schema_guard():
    rep = analyze(families.chain(2))
    data = rep.to_dict()
    data["schema"] = 99
    with pytest.raises(SchemaError):
        AnalysisReport.from_dict(data)
    with pytest.raises(SchemaError):
        AnalysisReport.from_json("{}")


def test_report_witnesses_are_valid():
    p = families.example_3_1()
    rep = analyze(p)
    points = {w["point"] for w in rep.potential_points}
    assert points == {"A", "B", "C"}
    for w in rep.potential_points:
        assert w["witness"][-1] == w["point"]
