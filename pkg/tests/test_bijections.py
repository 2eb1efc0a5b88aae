from collections import Counter

import pytest

from hexpath import bijections as bj
from hexpath.counters import kiss_polys
from hexpath.errors import IllegalTransition, InvalidImagePath, NotAxisPath, NotInchworm
from hexpath.geometry import enumerate_paths, kissing_of
from hexpath.steps import is_inchworm, parse_path


def axis_paths(width):
    return [p for p in enumerate_paths(max_width=width, axis_only=True, exact=True)]


def test_skew_dyck_small_cases():
    assert str(bj.to_skew_dyck(parse_path("U F D"))) == "u d"
    assert str(bj.to_skew_dyck(parse_path("U Ub Db D"))) == "u d2"
    assert str(bj.to_skew_dyck(parse_path(""))) == ""


@pytest.mark.parametrize("n", range(5))
def test_skew_dyck_is_a_bijection(n):
    images = [bj.to_skew_dyck(p) for p in axis_paths(4 * n)]
    assert len(set(images)) == len(images)
    assert set(images) == set(bj.enumerate_skew_dyck(n))
    assert all(im.semilength == n for im in images)


def test_width_eight_images():
    images = {str(bj.to_skew_dyck(p)) for p in axis_paths(8)}
    assert len(images) == 10
    assert images == {str(s) for s in bj.enumerate_skew_dyck(2)}


def test_skew_dyck_counts():
    assert [sum(1 for _ in bj.enumerate_skew_dyck(n)) for n in range(6)] == [1, 2, 10, 58, 370, 2514]


def test_qmotzkin_small_cases():
    assert str(bj.to_qmotzkin(parse_path("U F D"))) == "u d f"
    assert str(bj.to_qmotzkin(parse_path("U Ub Db D"))) == "u d f f"


def test_qmotzkin_counts():
    assert [sum(1 for _ in bj.enumerate_qmotzkin(n)) for n in range(10)] == [1, 0, 0, 1, 1, 1, 3, 5, 7, 14]


def test_qmotzkin_is_a_bijection_by_length():
    by_len = Counter()
    images = set()
    for p in enumerate_paths(max_steps=9, axis_only=True):
        q = bj.to_qmotzkin(p)
        assert len(q) == p.nbsteps
        images.add(q)
        by_len[len(q)] += 1
    assert sum(by_len.values()) == len(images)
    for n in range(10):
        assert {q for q in images if len(q) == n} == set(bj.enumerate_qmotzkin(n))


def test_circle_sequences():
    c = bj.path_to_circle_sequence
    assert [tuple(v) for v in c(parse_path("U F D"))] == [(2, 0)]
    assert [tuple(v) for v in c(parse_path("U F Fb F D"))] == [(2, 0), (6, 0)]
    assert [tuple(v) for v in c(parse_path("U Ub U F D Db D"))] == [(2, 0), (4, 2), (6, 0)]
    assert c(parse_path("U Ub U F D Db D")).width == 8


def test_inchworm_images():
    assert str(bj.inchworm_to_dyck([(2, 0)])) == "U D"
    assert str(bj.inchworm_to_peakless([(2, 0)])) == "F"
    assert str(bj.inchworm_to_dyck(parse_path("U Ub U F D Db D"))) == "U U D D"


@pytest.mark.parametrize("n", range(1, 6))
def test_inchworm_to_dyck_is_a_bijection(n):
    inch = [p for p in axis_paths(4 * n) if is_inchworm(p)]
    images = [bj.inchworm_to_dyck(p) for p in inch]
    assert set(images) == set(bj.enumerate_dyck(n)) and len(set(images)) == len(images)
    for p, d in zip(inch, images):
        assert d.peaks == 2 * n - kissing_of(p)


def test_width_sixteen_inchworms():
    inch = [p for p in axis_paths(16) if is_inchworm(p)]
    assert len({bj.inchworm_to_dyck(p) for p in inch}) == 14


def test_inchworm_to_peakless():
    images = Counter()
    for n in range(1, 6):
        for p in axis_paths(4 * n):
            if is_inchworm(p):
                m = bj.inchworm_to_peakless(p)
                assert len(m) == kissing_of(p)
                images[m] += 1
    assert max(images.values()) == 1
    inch = kiss_polys(28)
    for k in range(1, 6):
        got = {m for m in images if len(m) == k}
        assert got == set(bj.enumerate_peakless(k))
    assert [sum(1 for _ in bj.enumerate_peakless(n)) for n in range(7)] == [1, 1, 1, 2, 4, 8, 17]
    assert inch.poly(4) == {1: 2}


def test_errors():
    with pytest.raises(NotAxisPath):
        bj.to_skew_dyck(parse_path("U"))
    with pytest.raises(NotAxisPath):
        bj.to_qmotzkin(parse_path("U F"))
    with pytest.raises(NotInchworm):
        bj.path_to_circle_sequence(parse_path("U Ub Db D"))
    with pytest.raises(InvalidImagePath):
        bj.CircleSequence([(2, 0), (4, 0)])
    with pytest.raises(InvalidImagePath):
        bj.CircleSequence([(6, 0)])


def test_image_validators():
    assert not bj.ColoredSkewDyckPath.is_valid(["u", "l"])
    assert not bj.ColoredSkewDyckPath.is_valid(["u", "u", "l", "u", "d", "d"])
    assert bj.ColoredSkewDyckPath.is_valid(["u", "u", "d", "l"])
    assert not bj.QMotzkinPath.is_valid(["u", "d"])
    assert not bj.QMotzkinPath.is_valid(["f"])
    assert bj.QMotzkinPath.is_valid(["u", "d", "f"])
    assert not bj.DyckPath.is_valid(["D", "U"])
    assert not bj.PeaklessMotzkinPath.is_valid(["U", "D"])
    assert bj.PeaklessMotzkinPath.is_valid(["U", "F", "D"])
    with pytest.raises(InvalidImagePath):
        bj.DyckPath.parse("U X")


def test_long_example_with_fb_after_d_is_rejected():
    with pytest.raises(IllegalTransition) as ei:
        parse_path("U Ub U F D Db D Fb U Db D U F Fb F D")
    assert ei.value.position == 7
