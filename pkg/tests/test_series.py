from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hexpath.errors import (
    DivisionByZeroSeries,
    InsufficientDepth,
    NonUnitConstantTerm,
    OddValuation,
    TruncationError,
)
from hexpath.series import IntSeries, UPoly, cf_eval

N = 12


def catalan_series(order):
    return IntSeries([comb(2 * n, n) // (n + 1) for n in range(order)], 0, order)


coeff_lists = st.lists(st.integers(-20, 20), min_size=1, max_size=N)
unit_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=N - 1).map(lambda t: [1] + t)


def ser(cs):
    return IntSeries(cs, 0, N)


def test_basic_access_and_truncation():
    s = IntSeries.poly([1, 2, 3], 5)
    assert s[0] == 1 and s[2] == 3 and s[4] == 0
    with pytest.raises(TruncationError):
        s[5]
    assert s.truncate(2) == IntSeries.poly([1, 2], 2)
    with pytest.raises(TruncationError):
        s.truncate(9)


def test_zero_series_has_valuation_equal_to_order():
    z = IntSeries.zero(7)
    assert z.is_zero() and z.val == 7
    assert IntSeries([0, 0, 0], 0, 3).val == 3


def test_geometric_inverse():
    g = IntSeries.geometric(10)
    assert (IntSeries.poly([1, -1], 10) * g) == IntSeries.one(10)
    assert IntSeries.poly([1, -1], 10).inverse() == g


def test_catalan_functional_equation():
    c = catalan_series(15)
    x = IntSeries.x(15)
    assert (x * c * c + 1).agrees(c)


def test_catalan_from_sqrt():
    x = IntSeries.x(16)
    c = ((1 - (1 - 4 * x).sqrt()).shift(-1)) / 2
    assert c.agrees(catalan_series(15))
    assert c.is_integral()


def test_laurent_shift_and_division():
    x = IntSeries.x(10)
    q = (x**3 + x**4) / x**2
    assert q[1] == 1 and q[2] == 1 and q.val == 1
    inv = x.inverse()
    assert inv.val == -1 and inv[-1] == 1


def test_division_of_zero_numerator():
    z = IntSeries.zero(8)
    q = z / IntSeries.poly([0, 1], 8)
    assert q.is_zero() and q.order == 7


def test_errors():
    with pytest.raises(DivisionByZeroSeries):
        IntSeries.zero(5).inverse()
    with pytest.raises(DivisionByZeroSeries):
        IntSeries.one(5) / 0
    with pytest.raises(OddValuation):
        IntSeries.x(6).sqrt()
    with pytest.raises(NonUnitConstantTerm):
        IntSeries.poly([4, 1], 6).sqrt()


def test_fraction_coefficients_are_exact():
    s = IntSeries.poly([1, 1], 6).sqrt()
    assert s[1] == Fraction(1, 2) and s[2] == Fraction(-1, 8)
    assert not s.is_integral()
    with pytest.raises(Exception):
        s.assert_integral()


def test_stretch_and_sample_roundtrip():
    s = IntSeries.poly([1, 2, 3, 4], 6)
    t = s.stretch(4)
    assert t.order == 24 and t[8] == 3 and t[9] == 0
    assert t.sample(4) == s


def test_compose_and_reversion():
    x = IntSeries.x(10)
    f = x + x**2          # reversion is (sqrt(1+4x)-1)/2 = x C(-x)
    g = f.reversion()
    assert [g[k] for k in range(1, 8)] == [(-1) ** (k - 1) * comb(2 * k - 2, k - 1) // k for k in range(1, 8)]
    assert f.compose(g).agrees(x, 10)
    assert IntSeries.geometric(10).compose(x**2)[4] == 1


def test_format_and_json():
    s = IntSeries.poly([1, -2, 0, 3], 5)
    assert str(s) == "1 - 2*x^1 + 3*x^3"
    assert s.format() == "1 - 2*x^1 + 3*x^3 + O(x^5)"
    assert IntSeries.from_json(s.to_json(), 5) == s
    assert str(IntSeries.zero(3)) == "0"


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    a, b, c = ser(a), ser(b), ser(c)
    assert (a + b) == (b + a)
    assert (a * b).agrees(b * a)
    assert ((a * b) * c).agrees(a * (b * c))
    assert (a * (b + c)).agrees(a * b + a * c)
    assert (a - a).is_zero()


@given(unit_lists)
def test_inverse_property(a):
    a = ser(a)
    assert (a * a.inverse()).agrees(IntSeries.one(N))


@settings(max_examples=50)
@given(unit_lists)
def test_sqrt_squares_back(a):
    a = ser(a)
    r = a.sqrt()
    assert (r * r).agrees(a)


@given(unit_lists, st.integers(0, 5))
def test_pow_matches_repeated_multiplication(a, k):
    a = ser(a)
    p = IntSeries.one(N)
    for _ in range(k):
        p = p * a
    assert (a**k).agrees(p)


# ---- UPoly ------------------------------------------------------------------------------

def test_upoly_product_and_slice():
    p = UPoly.from_rows({0: {0: 1}, 1: {1: 1}}, 6)   # 1 + u x
    q = p * p
    assert q.x_slice(2) == {2: 1}
    assert q.coeff(1, 1) == 2


def test_upoly_inverse_and_sqrt():
    p = UPoly.from_rows({0: {0: 1}, 1: {1: -1}}, 8, deg_bound=8)   # 1 - u x
    inv = p.inverse()
    assert all(inv.coeff(n, n) == 1 for n in range(8))
    sq = (inv * inv).sqrt()
    assert sq.agrees(inv)


def test_upoly_at_one_and_shifts():
    p = UPoly.from_rows({0: {0: 1}, 2: {1: 3, 2: 1}}, 5)
    assert p.at_one()[1] == 3 and p.at_one()[2] == 1
    q = UPoly.from_rows({2: {1: 3, 2: 1}}, 5)
    assert q.shift_u(-2).coeff(1, 0) == 3
    with pytest.raises(Exception):
        p.shift_u(-2)
    assert p.stretch_x(4).coeff(8, 2) == 1


# ---- continued fractions -----------------------------------------------------------------

def test_cf_catalan():
    # C = 1/(1 - x/(1 - x/(1 - ...)))
    order = 10
    x = IntSeries.x(order)
    one = IntSeries.one(order)

    def level(k):
        return (one, one) if k == 0 else (x, one)

    assert cf_eval(level, order, order).agrees(catalan_series(order))


def test_cf_depth_is_certified():
    x = IntSeries.x(10)
    levels = lambda k: (IntSeries.one(10), IntSeries.one(10)) if k == 0 else (x, IntSeries.one(10))
    with pytest.raises(InsufficientDepth):
        cf_eval(levels, 3, 10)
