import json

import pytest

from hexpath import riordan as r
from hexpath.errors import BoundExceeded, InvalidPair, NotRiordan, UnknownName
from hexpath.series import IntSeries


def test_rows_from_counts():
    assert r.build_from_counts("Se2", 4).row(3) == [58, 38, 10, 1]
    assert r.build_from_counts("So3", 7).row(6) == [15, 22, 18, 12, 6, 1, 1]
    for which in r.ARRAYS:
        a = r.build_from_counts(which, 5)
        assert a.row(0) == [1]
        assert all(a.entry(n, n) == 1 for n in range(5))


@pytest.mark.parametrize("which", r.ARRAYS)
def test_pair_reproduces_counts(which):
    assert r.build_from_closed_pair(which, 12) == r.build_from_counts(which, 12)


def test_pascal():
    p = r.pascal(6)
    assert p.row(5) == [1, 5, 10, 10, 5, 1]
    assert r.a_sequence(p) == [1, 1, 0, 0, 0]
    assert r.z_sequence(p) == [1, 0, 0, 0, 0]


def test_se2_inverse_pair():
    g, f = r.closed_pair("Se2", 12)
    d, h = r.pair_inverse((g, f))
    x = IntSeries.x(12)
    assert d.agrees((1 - x) / (1 + x))
    assert h.agrees((x - x**2) / (1 + 3 * x))


@pytest.mark.parametrize("which", r.ARRAYS)
def test_group_laws(which):
    m = 12
    a = r.build_from_closed_pair(which, m)
    assert r.multiply(a, r.identity(m)) == a
    assert r.multiply(a, r.inverse(a)) == r.identity(m)
    assert a @ r.matrix_inverse(a) == r.identity(m)
    assert r.matrix_inverse(a) == r.inverse(a)


@pytest.mark.parametrize("which", r.ARRAYS)
def test_az_sequences(which):
    a = r.build_from_counts(which, 10)
    A, Z = r.a_sequence(a), r.z_sequence(a)
    assert r.check_az(a, A, Z)
    A2, Z2 = r.az_from_inverse(r.build_from_closed_pair(which, 10))
    assert A == A2 and Z == Z2
    bad = list(A)
    bad[1] += 1
    assert not r.check_az(a, bad, Z)


def test_se2_az_regenerates_row_three():
    a = r.build_from_counts("Se2", 6)
    A, Z = r.a_sequence(a), r.z_sequence(a)
    assert A[:3] == [1, 4, 4] and Z[:3] == [2, 6, 2]
    d = a.rows
    assert A[0] * d[2][0] + A[1] * d[2][1] + A[2] * d[2][2] == d[3][1] == 38
    assert Z[0] * d[2][0] + Z[1] * d[2][1] + Z[2] * d[2][2] == d[3][0] == 58


def test_errors():
    with pytest.raises(BoundExceeded):
        r.build_from_counts("Se2", 17)
    with pytest.raises(UnknownName):
        r.build_from_counts("Sx", 3)
    x = IntSeries.x(6)
    with pytest.raises(InvalidPair):
        r.build_from_pair(x, x, 5)
    with pytest.raises(InvalidPair):
        r.build_from_pair(1 + x, 1 + x, 5)
    with pytest.raises(NotRiordan):
        r.a_sequence(r.RiordanMatrix(((1, 0, 0, 0), (1, 1, 0, 0), (1, 5, 1, 0), (1, 1, 1, 1))))


def test_serialization():
    a = r.build_from_counts("So2", 4)
    assert a.to_csv().splitlines()[2] == "4,2,1,0"
    assert json.loads(a.to_json())["rows"][3] == ["10", "8", "2", "1"]
