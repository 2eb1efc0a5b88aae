import json

from hexpath.counters import kiss_polys, width_height_table
from hexpath.tables import StatTable, poly_from_pairs


def test_json_roundtrip():
    t = width_height_table(10)
    back = StatTable.from_json(t.to_json(), 10)
    assert back.agrees(t) and back.entries == t.entries
    obj = json.loads(t.to_json())
    assert obj["statistic"] == ["width"] and obj["by"] == ["height"]
    assert [8, 0, "10"] in obj["entries"]


def test_csv_and_text():
    t = width_height_table(4)
    lines = t.to_csv().splitlines()
    assert lines[0] == "width,height,count"
    assert "4,0,2" in lines
    assert "4: 1*u^4 + 2" in t.to_text()


def test_totals_and_diff():
    t = width_height_table(6)
    assert t.totals() == [1, 1, 1, 3, 3, 7, 7]
    other = StatTable(t.statistic, t.by, dict(t.entries), t.bound)
    other.entries[(6, 2)] += 1
    assert t.diff(other) == [(6, 2, 6, 7)]
    assert t.restrict(3).bound == 3


def test_entries_are_sorted_and_deterministic():
    t = width_height_table(8)
    got = [(n, k) for n, k, _ in t]
    assert got == sorted(got)
    assert t.to_json() == width_height_table(8).to_json()


def test_axis_poly_table():
    t = kiss_polys(12)
    assert t.widths() == [0, 4, 8, 12]
    assert t[8] == {2: 8, 3: 2}
    st = t.to_stat_table()
    assert st.by == "kiss" and st.get(12, 4) == 24
    assert poly_from_pairs([(1, 1), (1, 1), (3, 1)]) == {1: 2, 3: 1}
