import json
from fractions import Fraction

import pytest

from dressian.documents import (FanFile, dump_document, emit_arrangement,
                                emit_fan, emit_subdivision, emit_weight,
                                load_document, parse_arrangement, parse_fan,
                                parse_subdivision, parse_weight,
                                rational_from_json, rational_to_json)
from dressian.errors import FormatError
from dressian.fixtures import cone_class_arrangement, delta48_weight
from dressian.arrangements import metrize_abstract_arrangement
from dressian.subdivision import regular_subdivision
from dressian.subsets import WeightVector

F = Fraction


def test_rational_json_round_trip():
    for x in (F(0), F(3), F(-7), F(1, 2), F(-22, 7)):
        assert rational_from_json(rational_to_json(x)) == x
    assert rational_to_json(F(4, 2)) == 2
    assert rational_to_json(F(1, 3)) == "1/3"
    with pytest.raises(FormatError):
        rational_from_json(0.5)
    with pytest.raises(FormatError):
        rational_from_json(True)
    with pytest.raises(FormatError):
        rational_from_json("1/0")


def test_weight_document_round_trip_bit_exact():
    w = WeightVector(2, 4, [F(0), F(1, 3), F(-2), F(5, 7), F(1), F(0)])
    doc = emit_weight(w)
    assert doc["ordering"] == "lex"
    assert parse_weight(doc) == w
    assert parse_weight(json.loads(json.dumps(doc))) == w
    assert load_document(dump_document(w)) == w


def test_weight_document_default_ordering_and_errors():
    doc = emit_weight(WeightVector.zero(2, 4))
    del doc["ordering"]
    assert parse_weight(doc) == WeightVector.zero(2, 4)
    doc["ordering"] = "colex"
    with pytest.raises(FormatError):
        parse_weight(doc)
    bad = emit_weight(WeightVector.zero(2, 4))
    bad["values"] = bad["values"][:-1]
    with pytest.raises(FormatError):
        parse_weight(bad)


def test_subdivision_document_round_trip():
    sd = regular_subdivision(delta48_weight())
    assert load_document(dump_document(sd)) == sd
    doc = emit_subdivision(sd)
    assert doc["cells"] == sorted(doc["cells"])


def test_arrangement_document_round_trip():
    TA = metrize_abstract_arrangement(cone_class_arrangement(4))
    doc = emit_arrangement(TA)
    assert [e["index"] for e in doc["trees"]] == \
        sorted(e["index"] for e in doc["trees"])
    back = parse_arrangement(json.loads(json.dumps(doc)))
    assert emit_arrangement(back) == doc


def test_arrangement_document_rejects_duplicates_and_bad_leaves():
    TA = metrize_abstract_arrangement(cone_class_arrangement(4))
    doc = emit_arrangement(TA)
    doc["trees"].append(doc["trees"][0])
    with pytest.raises(FormatError):
        parse_arrangement(doc)


def test_fan_document_round_trip_and_validation():
    fan = FanFile(2, 4, [[1, 0, 0, 0, 0, 1]], [[1, 1, 1, 0, 0, 0]], [[0]])
    assert load_document(dump_document(fan)) == fan
    with pytest.raises(FormatError):
        FanFile(2, 4, [[1, 0]], [], [])
    with pytest.raises(FormatError):
        FanFile(2, 4, [[1, 0, 0, 0, 0, 1]], [], [[1]])


def test_load_document_errors():
    with pytest.raises(FormatError):
        load_document("not json")
    with pytest.raises(FormatError):
        load_document('{"type": "mystery"}')
    with pytest.raises(FormatError):
        load_document('[1, 2, 3]')
    with pytest.raises(FormatError):
        load_document('{"type":"weight","k":2,"n":4,'
                      '"values":[0.25,0,0,0,0,0]}')
