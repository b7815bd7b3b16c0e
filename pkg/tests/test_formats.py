import json

import pytest
from hypothesis import given, settings, strategies as st

from bolpq import formats
from bolpq.ff import make_context
from bolpq.loopcore import LoopTable, cyclic_group
from bolpq.report import classify

TABLES = [e.table for pq in [(5, 3), (7, 3), (11, 5)] for e in classify(*pq).loops] + [cyclic_group(9)]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(TABLES))
def test_roundtrips(t):
    assert formats.from_json(formats.to_json(t)) == t
    assert formats.from_csv(formats.to_csv(t)) == t
    assert formats.from_gap(formats.to_gap(t)) == t
    assert formats.from_csv(formats.to_csv(t)).table.tobytes() == t.table.tobytes()


def test_layout(bruck73):
    doc = json.loads(formats.to_json(bruck73, case="q|p-1"))
    assert doc["schema"] == 1 and doc["n"] == 21 and doc["case"] == "q|p-1"
    csv_text = formats.to_csv(bruck73)
    assert "\r" not in csv_text and csv_text.count("\n") == 21
    assert not csv_text.startswith("n")
    gap = formats.to_gap(bruck73)
    assert gap.startswith("LoopByCayleyTable([") and gap.rstrip().endswith("]);")
    assert gap.splitlines()[1].strip().startswith("[1,2,3,")


def test_bad_inputs():
    with pytest.raises(ValueError):
        formats.from_gap("Group(())")
    with pytest.raises(ValueError):
        formats.from_json(json.dumps({"n": 2, "table": [[0]]}))
