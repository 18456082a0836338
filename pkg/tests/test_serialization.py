from fractions import Fraction
import json

import numpy as np
import pytest

from cohomology import buildTable
from instanton import checkInstanton
from labErrors import DescriptorError
from monads import monadPn, monadQuadricOrdinary
from serialization import (rationalToText, render, shapeFromJson, tableFromJson, textToRational, toJson, toJsonable,
    toMarkdown, verdictFromJson)
from varieties import parseVariety


@pytest.fixture
def flagTable():
    return buildTable(parseVariety("flag3"), "-1,3", (-4, 0))


def test_table_round_trip(flagTable):
    parsed=tableFromJson(toJson(flagTable))
    assert parsed==flagTable
    assert parsed.chi(-1)==flagTable.chi(-1)
    assert parsed.chern==flagTable.chern


def test_table_schema(flagTable):
    data=json.loads(toJson(flagTable))
    assert data["variety"]=="flag3"
    assert data["rank"]==1
    assert data["window"]=={"tmin": -4, "tmax": 0}
    assert [row["t"] for row in data["rows"]]==[-4, -3, -2, -1, 0]
    assert {"t": -1, "h": [0, 3, 0, 0]} in data["rows"]
    #c1 = -h1+3h2
    assert data["chern"]["c1"]==[{"monomial": [0, 1], "coefficient": 3}, {"monomial": [1, 0], "coefficient": -1}]


def test_table_written_by_hand():
    data={
        "variety": "p3",
        "rank": 1,
        "window": {"tmin": -1, "tmax": 0},
        "rows": [{"t": 0, "h": [1, 0, 0, 0]}, {"t": -1, "h": [0, 0, 0, 0]}],
    }
    table=tableFromJson(json.dumps(data))
    assert table.window==(-1, 0)
    assert table.h(0, 0)==1
    assert table.chern is None


def test_chern_round_trip_on_a_cyclic_cover():
    variety=parseVariety("p3@2")
    table=buildTable(variety, "O:1+O", (-4, 0))
    parsed=tableFromJson(toJson(table))
    assert parsed.chern==table.chern
    assert parsed.chern.c2==table.chern.c2
    assert parsed.varietyId=="p3@2"


def test_curve_table_keeps_assumptions():
    table=buildTable(parseVariety("curve:2:3"), "theta:1+theta")
    parsed=tableFromJson(toJson(table))
    assert parsed.assumptions==table.assumptions
    assert parsed.assumptions


def test_verdict_round_trip(flagTable):
    verdict=checkInstanton(flagTable)
    parsed=verdictFromJson(toJson(verdict))
    assert parsed==verdict
    assert parsed.quantum(0)==3


def test_verdict_schema():
    verdict=checkInstanton(buildTable(parseVariety("p3"), "O", (-4, 0)))
    data=json.loads(toJson(verdict))
    assert data["admissible"][0]=={"defect": 0, "quantum": 0}
    assert data["ulrich"] is True
    assert data["wic"] is True
    assert isinstance(data["natural"], bool)
    assert isinstance(data["notes"], list)


@pytest.mark.parametrize("shape", [
    monadPn(3, 0, 2, 2),
    monadPn(3, 1, 1, 1, 2, 2),
    monadQuadricOrdinary(3, 2, 4),
    monadQuadricOrdinary(4, 2, 1),
])
def test_shape_round_trip(shape):
    assert shapeFromJson(toJson(shape))==shape


def test_rationals():
    assert rationalToText(Fraction(3, 1))==3
    assert rationalToText(Fraction(-1, 2))=="-1/2"
    assert textToRational("-1/2")==Fraction(-1, 2)
    assert textToRational("4/2")==2
    assert isinstance(textToRational("4/2"), int)
    with pytest.raises(DescriptorError):
        textToRational("half")


def test_plain_types():
    data=toJsonable({(0, 2): np.int64(7), "ratio": Fraction(3, 4), "set": (1, 2)})
    assert data=={"0,2": 7, "ratio": "3/4", "set": [1, 2]}
    assert type(data["0,2"]) is int
    json.dumps(data)


def test_bad_json():
    with pytest.raises(DescriptorError):
        tableFromJson("{not json")
    with pytest.raises(DescriptorError):
        tableFromJson({"variety": "p3"})
    with pytest.raises(DescriptorError):
        verdictFromJson({"admissible": [[0, 0]], "ulrich": True, "wic": True, "natural": True})
    with pytest.raises(DescriptorError):
        verdictFromJson({"admissible": [{"defect": 0, "quantum": 0}]})
    with pytest.raises(DescriptorError):
        tableFromJson({"variety": "p3", "rank": 1, "window": [-1, 0], "rows": []})


def test_markdown(flagTable):
    text=toMarkdown(flagTable)
    assert text.startswith("| t | h^0 | h^1 | h^2 | h^3 | chi |")
    assert "| -1 | 0 | 3 | 0 | 0 | -3 |" in text

    text=toMarkdown(checkInstanton(flagTable))
    assert "| 0 | 3 |" in text
    assert "- instanton: True" in text

    assert "O_X(h)^4" in toMarkdown(monadQuadricOrdinary(3, 2, 4))
    assert "| quantum | 3 |" in toMarkdown({"quantum": 3})


def test_render_formats(flagTable):
    assert json.loads(render(flagTable, "json"))["rank"]==1
    assert render(flagTable, "md")==toMarkdown(flagTable)
    with pytest.raises(DescriptorError):
        render(flagTable, "yaml")
