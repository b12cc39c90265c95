import json
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricpack import catalog, io
from toricpack.delzant import check_delzant, classify
from toricpack.errors import InputError
from toricpack.packing import decide_perfect_packing, omega


@pytest.mark.parametrize("name", list(catalog.CATALOG))
def test_entries_are_delzant_unless_flagged(name):
    entry = catalog.CATALOG[name]
    assert check_delzant(catalog.get(name)).is_delzant is not entry.negative


def test_hirzebruch_family():
    assert catalog.get("hirzebruch", 5, 1, 2).volume() == 6
    with pytest.raises(InputError):
        catalog.get("hirzebruch", 3, 2, 2)
    with pytest.raises(InputError):
        catalog.get("hirzebruch", 1, 3, 1)


def test_aliases_and_keywords():
    assert catalog.get("cp3", "lambda=2") == catalog.get("cpn", 3, 2)
    assert catalog.get("cpn", "λ=5", "n=1") == catalog.get("interval", 5)
    assert catalog.get("square", "1/2") == catalog.get("cp1xcp1", F(1, 2))
    with pytest.raises(InputError):
        catalog.get("cpn", "radius=2")
    with pytest.raises(InputError):
        catalog.get("cpn", 0)


@given(st.lists(st.tuples(st.fractions(-5, 5, max_denominator=9), st.fractions(-5, 5, max_denominator=9)),
                min_size=3, max_size=8))
def test_polytope_json_roundtrip(pts):
    from toricpack.errors import DegenerateHull
    from toricpack.polytope import Polytope

    try:
        p = Polytope.from_vertices(pts)
    except DegenerateHull:
        return
    text = io.dumps(io.polytope_to_json(p))
    assert all(isinstance(c, str) for v in json.loads(text)["vertices"] for c in v)
    assert io.polytope_from_json(text) == p


def test_report_shapes():
    p = catalog.get("cp1xcp1", 2)
    doc = io.delzant_report_to_json(check_delzant(p))
    assert doc["is_delzant"] and doc["chi"] == 4 and len(doc["vertices"]) == 4
    doc = io.classification_to_json(classify(p))
    assert doc["transform"]["A"] == [[1, 0], [0, 1]] and doc["transform"]["w"] == ["0", "0"]
    doc = io.packing_report_to_json(omega(catalog.get("hirzebruch")))
    assert set(doc) >= {"lower", "upper", "exact", "perfect", "witness"}
    assert doc["witness"] == [{"anchor": ["0", "1"], "t": "1"}, {"anchor": ["3", "0"], "t": "1"}]
    doc = io.decision_to_json(decide_perfect_packing(catalog.get("interval", F(3, 2))), True)
    assert doc["packings"][0]["range"] == ["0", "3/2"]
    assert doc["packings"][0]["balls"][1]["t"] == "3/2-a"
