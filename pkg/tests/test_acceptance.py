"""Acceptance criteria 1-11.  Each test carries a ``criterion`` marker and the
terminal summary prints one PASS/FAIL line per criterion.

Run alone with ``pytest tests/test_acceptance.py -v`` (add ``-m "not slow"`` to
skip criterion 10).
"""
import time
from collections import Counter

import pytest

from hexpath import bijections, closed_forms as cf, counters, geometry, oeis, riordan
from hexpath.steps import is_inchworm, parse_path

import reference_values as ref


def _rows(table, upto):
    return {n: table.row(n) for n in range(upto + 1)}


def _upoly_rows(p, upto):
    return {n: {k: v for k, v in p.x_slice(n).items() if v} for n in range(upto + 1)}


def _poly_rows(polys, widths):
    return {w: {k: v for k, v in polys.poly(w).items() if v} for w in widths}


def _kiss_totals(polys, kmax):
    tot = Counter()
    for w in polys.widths():
        for k, c in polys.poly(w).items():
            tot[k] += c
    return [tot[k] for k in range(kmax + 1)]


# ---- 1 -----------------------------------------------------------------------------------

@pytest.mark.criterion(1, "width/height: dp = printed S(x,u) = r^k series = brute force")
def test_c01_width_height():
    t0 = time.perf_counter()
    dp = counters.width_height_table(40)
    assert _rows(dp, 11) == ref.WIDTH_HEIGHT
    assert dp.get(8, 0) == 10 and dp.get(5, 1) == 4
    series = cf.S2_xu(41)
    assert _rows(dp, 40) == _upoly_rows(series, 40)
    brute = geometry.brute_stat_table(("width", "height"), 20)
    assert dp.diff(brute, 20) == []
    assert time.perf_counter() - t0 < 10


# ---- 2 -----------------------------------------------------------------------------------

@pytest.mark.criterion(2, "axis-width counts from dp, binomial sum, S(x,0) and A086871")
def test_c02_axis_width():
    t0 = time.perf_counter()
    want = ref.AXIS_WIDTH
    assert counters.axis_counts(24) == want
    assert [cf.axis_width_closed(n) for n in range(7)] == want
    s0 = cf.S2_x0(25)
    assert [s0[4 * n] for n in range(7)] == want
    assert all(s0[k] == 0 for k in range(25) if k % 4)
    snap = oeis.get("A086871").terms
    assert len(snap) == 7 and list(snap) == want
    assert oeis.check("A086871").match
    assert time.perf_counter() - t0 < 1


# ---- 3 -----------------------------------------------------------------------------------

@pytest.mark.criterion(3, "totals by width and A368773")
def test_c03_width_totals():
    s1 = cf.S2_x(12)
    assert [s1[n] for n in range(12)] == ref.WIDTH_TOTALS
    assert counters.width_height_table(11).totals() == ref.WIDTH_TOTALS
    even = ref.WIDTH_TOTALS[0::2]
    snap = list(oeis.get("A368773").terms)
    assert even[: len(snap)] == snap
    assert oeis.check("A368773").match


# ---- 4 -----------------------------------------------------------------------------------

@pytest.mark.criterion(4, "steps: printed expansion, totals, axis counts, coefficient formulas")
def test_c04_steps():
    t0 = time.perf_counter()
    dp = counters.steps_height_table(20)
    assert _rows(dp, 7) == ref.STEPS_HEIGHT
    assert dp.get(7, 0) == 5
    assert dp.totals()[:12] == ref.STEPS_TOTALS
    s1 = cf.S3_x(12)
    assert [s1[n] for n in range(12)] == ref.STEPS_TOTALS
    axis = [dp.get(n, 0) for n in range(14)]
    assert axis == ref.AXIS_STEPS
    assert [cf.axis_steps_closed(n) for n in range(14)] == ref.AXIS_STEPS
    s0 = cf.S3_x0(14)
    assert [s0[n] for n in range(14)] == ref.AXIS_STEPS
    assert list(oeis.get("A346503").terms) == ref.AXIS_STEPS
    assert oeis.check("A346503").match
    for n in range(21):
        for h in range(n + 1):
            assert cf.s3_closed(n, h) == dp.get(n, h), (n, h)
    assert _rows(dp, 20) == _upoly_rows(cf.S3_xu(21), 20)
    assert time.perf_counter() - t0 < 10


# ---- 5 -----------------------------------------------------------------------------------

@pytest.mark.criterion(5, "area: dp = geometry (<=24) = continued fraction (<=32); A(1,y)")
def test_c05_area():
    t0 = time.perf_counter()
    dp = counters.area_polys(36)
    widths24 = range(0, 25, 4)
    assert _poly_rows(dp, widths24) == _poly_rows(geometry.brute_axis_polys("area", 24), widths24)
    cfp = cf.A_area_cf(33)
    widths32 = range(0, 33, 4)
    assert _poly_rows(dp, widths32) == {w: {k: v for k, v in cfp.x_slice(w).items() if v} for w in widths32}
    assert _poly_rows(dp, ref.AREA) == ref.AREA
    # area k only occurs up to width 4k
    assert _kiss_totals(dp, 9) == ref.AREA_TOTALS
    a1 = cf.A_area_1y(10)
    assert [a1[k] for k in range(10)] == ref.AREA_TOTALS
    assert time.perf_counter() - t0 < 60


# ---- 6 -----------------------------------------------------------------------------------

@pytest.mark.criterion(6, "kiss: dp = geometry (<=24) = closed form (<=32); totals; Schroeder; 1600")
def test_c06_kiss():
    t0 = time.perf_counter()
    dp = counters.kiss_polys(52)
    widths24 = range(0, 25, 4)
    assert _poly_rows(dp, widths24) == _poly_rows(geometry.brute_axis_polys("kiss", 24), widths24)
    closed = cf.A_kiss(33)
    widths32 = range(0, 33, 4)
    assert _poly_rows(dp, widths32) == {w: {k: v for k, v in closed.x_slice(w).items() if v} for w in widths32}
    assert _poly_rows(dp, ref.KISS) == ref.KISS
    assert dp.poly(24)[9] == 1600
    # kiss k only occurs up to width 4k
    assert _kiss_totals(dp, 8) == ref.KISS_TOTALS
    a1 = cf.A_kiss_1y(9)
    assert [a1[k] for k in range(9)] == ref.KISS_TOTALS
    totals = _kiss_totals(dp, 13)
    for n in range(1, 13):
        assert cf.kiss_total_schroder(n) == cf.kiss_total_closed(n) == totals[n], n
    assert time.perf_counter() - t0 < 60


# ---- 7 -----------------------------------------------------------------------------------

@pytest.mark.criterion(7, "inchworm: printed A'(x,y), Catalan, Narayana, A'(1,y) and A004148")
def test_c07_inchworm():
    dp = counters.inchworm_polys(44)
    widths = range(0, 25, 4)
    assert _poly_rows(dp, widths) == ref.INCHWORM
    closed = cf.A_inch(25)
    assert {w: {k: v for k, v in closed.x_slice(w).items() if v} for w in widths} == ref.INCHWORM
    assert [dp.total(4 * n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [dp.total(4 * n) for n in range(12)] == [cf.catalan(n) for n in range(12)]
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert dp.poly(4 * n).get(n - 1 + k, 0) == cf.narayana(n, k) == _narayana_formula(n, k)
    totals = _kiss_totals(dp, 10)
    assert totals == ref.INCHWORM_KISS_TOTALS
    a1 = cf.A_inch_1y(11)
    assert [a1[k] for k in range(11)] == ref.INCHWORM_KISS_TOTALS
    snap = list(oeis.get("A004148").terms)
    assert snap[:11] == ref.INCHWORM_KISS_TOTALS
    assert oeis.check("A004148").match
    assert oeis.check("A001263").match


def _narayana_formula(n, k):
    from math import comb
    return comb(n - 1, k - 1) * comb(n, k - 1) // k


# ---- 8 -----------------------------------------------------------------------------------

def _full_image(images, codomain, sizes):
    by_size = {}
    for size, img in images:
        bucket = by_size.setdefault(size, [])
        bucket.append(img)
    for n in sizes:
        got = by_size.get(n, [])
        assert len(got) == len(set(got)), f"size {n}: not injective"
        want = {p.steps for p in codomain(n)}
        assert set(got) == want, f"size {n}: image differs from the codomain"


@pytest.mark.criterion(8, "bijections: injective, onto, statistics transported")
def test_c08_bijections():
    t0 = time.perf_counter()
    axis = list(geometry.enumerate_paths(max_width=24, axis_only=True))
    imgs = []
    for p in axis:
        img = bijections.to_skew_dyck(p)
        assert img.semilength == p.width // 4
        imgs.append((p.width // 4, img.steps))
    _full_image(imgs, bijections.enumerate_skew_dyck, range(7))

    imgs = []
    for p in geometry.enumerate_paths(max_steps=14, axis_only=True):
        img = bijections.to_qmotzkin(p)
        assert len(img) == p.nbsteps
        imgs.append((p.nbsteps, img.steps))
    _full_image(imgs, bijections.enumerate_qmotzkin, range(15))

    dy, pk = [], []
    for p in axis:
        if not is_inchworm(p):
            continue
        n, k = p.width // 4, geometry.kissing_of(p)
        d = bijections.inchworm_to_dyck(p)
        assert d.semilength == n and d.peaks == 2 * n - k
        m = bijections.inchworm_to_peakless(p)
        assert len(m) == k
        dy.append((n, d.steps))
        pk.append((k, m.steps))
    _full_image(dy, bijections.enumerate_dyck, range(7))
    _full_image(pk, bijections.enumerate_peakless, range(7))
    assert time.perf_counter() - t0 < 120


# ---- 9 -----------------------------------------------------------------------------------

@pytest.mark.criterion(9, "Riordan arrays: counts = pairs, A/Z of Se2, Se2 * Se2^-1 = I")
def test_c09_riordan():
    for which, rows in (("Se2", ref.SE2), ("So2", ref.SO2), ("Se3", ref.SE3), ("So3", ref.SO3)):
        a = riordan.build_from_counts(which, 12)
        b = riordan.build_from_closed_pair(which, 12)
        assert a.rows == b.rows, which
        assert [a.row(n) for n in range(7)] == rows
    se2 = riordan.build_from_counts("Se2", 12)
    A = riordan.a_sequence(se2)
    Z = riordan.z_sequence(se2)
    assert A == [1] + [4] * 10
    assert Z == [2, 6] * 5 + [2]
    assert riordan.check_az(se2, A, Z)
    d = se2.rows
    for n in range(11):
        assert d[n + 1][0] == sum(Z[j] * d[n][j] for j in range(n + 1))
        for k in range(n + 1):
            assert d[n + 1][k + 1] == sum(A[i] * d[n][k + i] for i in range(n - k + 1))
    assert (se2 @ riordan.inverse(se2)) == riordan.identity(12)
    assert (se2 @ riordan.matrix_inverse(se2)) == riordan.identity(12)


# ---- 10 ----------------------------------------------------------------------------------

@pytest.mark.slow
@pytest.mark.criterion(10, "asymptotics: counts within 5%, expected height within 15%")
def test_c10_asymptotics():
    t0 = time.perf_counter()
    ax = counters.axis_counts(400)[100]
    assert ax == cf.axis_width_closed(100)
    assert abs(cf.ratio_to_asymptote("axis_width", 100, ax) - 1) < 0.05
    st = counters.steps_height_table(500, bound=600).get(500, 0)
    assert st == cf.axis_steps_closed(500)
    assert abs(cf.ratio_to_asymptote("axis_steps", 500, st) - 1) < 0.05
    ew = counters.expected_height(2000, "width", mode="float")
    assert abs(ew / cf.asymptote("exp_height_width", 2000) - 1) < 0.15
    es = counters.expected_height(2000, "steps", mode="float")
    assert abs(es / cf.asymptote("exp_height_steps", 2000) - 1) < 0.15
    assert time.perf_counter() - t0 < 300


# ---- 11 ----------------------------------------------------------------------------------

@pytest.mark.criterion(11, "geometry anchors: width 28, area 9, kiss 8, untouched (22,0)")
def test_c11_geometry_anchor():
    p = parse_path(ref.EXAMPLE_AXIS)
    assert p.width == 28 and p.nbsteps == 20 and p.ends_on_axis
    assert geometry.area_of(p) == 9
    assert geometry.kissing_of(p) == 8
    untouched = geometry.circles_below(p) - geometry.touched_circles(p)
    assert untouched == {geometry.CircleCenter(22, 0)}
    q = parse_path(ref.EXAMPLE_PARTIAL)
    assert (q.width, q.height, q.nbsteps) == (30, 2, 21)


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-v"]))
