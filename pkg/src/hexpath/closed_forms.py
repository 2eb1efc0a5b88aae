"""Closed-form generating functions, coefficient formulas and asymptotics.

Every generating function is evaluated as an exact truncated series.  Names
ending in ``_2`` (or starting ``S2``) use the width statistic, those with
``_3``/``S3`` the step count.  Bivariate series are :class:`UPoly` objects
whose second variable is the height ``u`` (or the kissing/area variable ``y``).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable

from .errors import IndexOutOfDomain, OrderTooLarge, SeriesError, UnknownName
from .series import IntSeries, UPoly, cf_eval

MAX_ORDER = 600
MAX_BIVARIATE_ORDER = 120
_PAD = 8


def _x(order: int) -> IntSeries:
    return IntSeries.x(order)


def _poly(coeffs, order: int) -> IntSeries:
    return IntSeries.poly(coeffs, order)


def _fit(s: IntSeries, order: int) -> IntSeries:
    if s.order < order:
        raise SeriesError(f"internal precision loss: have order {s.order}, need {order}")
    return s.truncate(order)


# ---- width statistic -----------------------------------------------------------

@lru_cache(maxsize=32)
def _sqrt_delta2(order: int) -> IntSeries:
    return _poly({0: 1, 4: -10, 8: 9}, order).sqrt()


def r2(order: int) -> IntSeries:
    """Kernel root ``r = (1 - 3x^4 - sqrt(1 - 10x^4 + 9x^8)) / (2x^2)`` (valuation 2)."""
    P = order + 2
    num = 1 - 3 * _x(P) ** 4 - _sqrt_delta2(P)
    return _fit(num.shift(-2) / 2, order)


def s2(order: int) -> IntSeries:
    """The conjugate root ``s = 1/r`` (valuation -2)."""
    P = order + 2
    num = 1 - 3 * _x(P) ** 4 + _sqrt_delta2(P)
    return _fit(num.shift(-2) / 2, order)


def g00_2(order: int) -> IntSeries:
    P = order + 2
    return _fit((r2(P) - _x(P) ** 2).shift(-2) / 2, order)


def S2_x0(order: int) -> IntSeries:
    """Axis paths by width: ``(x^2 + r) / (2x^2)``."""
    P = order + 2
    return _fit((r2(P) + _x(P) ** 2).shift(-2) / 2, order)


def S2_x0_radical(order: int) -> IntSeries:
    """Same series from ``(1 - x^4 - sqrt(1 - 10x^4 + 9x^8)) / (4x^4)``."""
    P = order + 4
    num = 1 - _x(P) ** 4 - _sqrt_delta2(P)
    return _fit(num.shift(-4) / 4, order)


def S2_x(order: int) -> IntSeries:
    """All partial paths by width (``S(x, 1)``)."""
    P = order + 3
    x = _x(P)
    num = -1 - x + 4 * x**3 + 9 * x**4 - 3 * x**5 + (1 + x) * _sqrt_delta2(P)
    den = 4 * (1 - 3 * x**2)
    return _fit(num.shift(-3) / den, order)


def _r_powers(r: IntSeries, kmax: int) -> list[IntSeries]:
    out = [IntSeries.one(r.order - r.val)]
    for _ in range(kmax):
        out.append(out[-1] * r)
    return out


def _components_2(order: int) -> dict[str, UPoly]:
    """The six last-step generating functions, expanded per power of ``u``.

    Uses ``1/(s - u^2) = r / (1 - r u^2)``.  Last steps: F0 = U, F1 = Ub,
    G0 = D, G1 = Db, H0 = F, H1 = Fb.
    """
    P = order + 3
    x = _x(P)
    r = r2(P)
    kmax = order // 2 + 2
    rp = _r_powers(r, kmax + 1)
    rows: dict[str, dict[int, IntSeries]] = {k: {} for k in ("F0", "F1", "G0", "G1", "H0", "H1")}
    rows["F0"][0] = IntSeries.one(P)
    a_f0 = (2 - r * x**2 - 3 * x**4).shift(-1) / 2
    a_g0 = (3 * x**2 + r) / 2
    a_g1 = (x**2 + r).shift(-1) / 2
    a_h1 = (3 * x**2 + r) * x / 2
    for k in range(0, kmax + 1):
        # coefficient of u^(2j+1) from u/(s - u^2) is r^(j+1); of u^(2j) from 1/(s - u^2) is r^(j+1)
        rk1 = rp[k + 1]
        rows["F0"][2 * k + 1] = a_f0 * rk1
        if k >= 1:
            rows["F1"][2 * k] = rp[k]
        rows["G0"][2 * k] = a_g0 * rk1
        rows["G1"][2 * k + 1] = a_g1 * rk1
        rows["H0"][2 * k + 1] = x * rk1
        rows["H1"][2 * k + 1] = a_h1 * rk1
    return {k: UPoly({e: _fit(s, order) for e, s in v.items()}, order) for k, v in rows.items()}


def S2_xu(order: int) -> UPoly:
    """Partial paths by width and height, one series per power of ``u``."""
    P = order + 3
    x = _x(P)
    r = r2(P)
    kmax = order // 2 + 2
    rp = _r_powers(r, kmax + 2)
    terms: dict[int, IntSeries] = {}
    for k in range(kmax + 1):
        even = (rp[k] * x**2 + rp[k + 1]).shift(-2) / 2
        odd = ((1 + 2 * x**2) * rp[k + 1] - x**2 * rp[k]).shift(-3) / 2
        terms[2 * k] = _fit(even, order)
        terms[2 * k + 1] = _fit(odd, order)
    return UPoly(terms, order)


def S2_xu_direct(order: int) -> UPoly:
    """``S(x,u) = (u(s x^2 - 2x^2 - 1) - s x^3 - x) / (2x^3 (u^2 - s))`` with Laurent ``s``."""
    P = order + 6
    x = _x(P)
    s = s2(P)
    num = UPoly({1: s * x**2 - 2 * x**2 - 1, 0: -s * x**3 - x}, P)
    den = UPoly({2: IntSeries.one(P), 0: -s}, P).truncate(deg_bound=order)
    q = (num * den.inverse()).truncate(deg_bound=order)
    out = {e: _fit(c.shift(-3) / 2, order) for e, c in q.terms.items()}
    return UPoly(out, order)


def F0(order):
    return _components_2(order)["F0"]


def F1(order):
    return _components_2(order)["F1"]


def G0(order):
    return _components_2(order)["G0"]


def G1(order):
    return _components_2(order)["G1"]


def H0(order):
    return _components_2(order)["H0"]


def H1(order):
    return _components_2(order)["H1"]


# ---- step statistic -------------------------------------------------------------

def _delta3(order: int) -> IntSeries:
    return _poly([1, 0, -2, -4, -3, 4, 4], order)


@lru_cache(maxsize=32)
def _sqrt_delta3(order: int) -> IntSeries:
    return _delta3(order).sqrt()


def r3(order: int) -> IntSeries:
    """Kernel root ``(1 - 2x^3 - x^2 - sqrt(Delta)) / (2x^2)`` for the step statistic."""
    P = order + 2
    x = _x(P)
    num = 1 - 2 * x**3 - x**2 - _sqrt_delta3(P)
    return _fit(num.shift(-2) / 2, order)


def s3(order: int) -> IntSeries:
    P = order + 2
    x = _x(P)
    num = 1 - 2 * x**3 - x**2 + _sqrt_delta3(P)
    return _fit(num.shift(-2) / 2, order)


def g00_3(order: int) -> IntSeries:
    P = order + 2
    x = _x(P)
    return _fit((r3(P) - x**2).shift(-1) / (1 + x), order)


def _p3(order: int) -> IntSeries:
    return _poly([1, -2, 1, -4, 4], order)


def S3_x(order: int) -> IntSeries:
    P = order + 2
    x = _x(P)
    num = 1 - x - 2 * x**2 - _p3(P).sqrt()
    return _fit(num.shift(-2) / (2 * (2 * x - 1)), order)


def S3_x0(order: int) -> IntSeries:
    P = order + 3
    x = _x(P)
    rad = ((1 - x) * (1 - 2 * x) * (1 + x + 2 * x**2)).sqrt()
    return _fit((1 - x - rad).shift(-3) / 2, order)


def S3_x0_from_root(order: int) -> IntSeries:
    """``(x + r) / (x (1 + x))``, the ``u^0`` coefficient of the step series."""
    P = order + 2
    x = _x(P)
    return _fit((x + r3(P)).shift(-1) / (1 + x), order)


def S3_xu(order: int) -> UPoly:
    P = order + 3
    x = _x(P)
    r = r3(P)
    kmax = order // 2 + 2
    rp = _r_powers(r, kmax + 2)
    den = 1 + x
    odd_fac = 2 * x**2 + 2 * x + 1
    terms: dict[int, IntSeries] = {}
    for k in range(kmax + 1):
        terms[2 * k] = _fit((x * rp[k] + rp[k + 1]).shift(-1) / den, order)
        if k >= 1:
            terms[2 * k - 1] = _fit(((r * x + odd_fac) * rp[k]).shift(-1) / den, order)
    return UPoly(terms, order)


def _components_3(order: int) -> dict[str, UPoly]:
    """Last-step generating functions for the step statistic via ``1/(u^2 - s) = -r/(1 - r u^2)``."""
    P = order + 3
    x = _x(P)
    r = r3(P)
    kmax = order // 2 + 2
    rp = _r_powers(r, kmax + 1)
    den = 1 + x
    a_f0 = (x + r) / den                     # (x s + 1) r
    a_g = (2 * x**2 + (1 + r) * x) * r / den
    a_g1 = (r + x) * r / den
    rows: dict[str, dict[int, IntSeries]] = {k: {} for k in ("F0", "F1", "G0", "G1", "H0", "H1")}
    rows["F0"][0] = IntSeries.one(P)
    for k in range(kmax + 1):
        rows["F0"][2 * k + 1] = a_f0 * rp[k]
        if k >= 1:
            rows["F1"][2 * k] = rp[k]
        rows["G0"][2 * k] = a_g * rp[k]
        rows["G1"][2 * k + 1] = a_g1 * rp[k]
        rows["H0"][2 * k + 1] = rp[k + 1]
        rows["H1"][2 * k + 1] = a_g * rp[k]
    return {k: UPoly({e: _fit(s, order) for e, s in v.items()}, order) for k, v in rows.items()}


def components(statistic: str, order: int) -> dict[str, UPoly]:
    """The six last-step generating functions (keys F0, F1, G0, G1, H0, H1)."""
    if statistic == "width":
        return _components_2(order)
    if statistic == "steps":
        return _components_3(order)
    raise ValueError(f"unknown statistic {statistic!r}")


# ---- area, kissing number, inchworm ------------------------------------------------

def _z_order(order: int) -> int:
    return -(-order // 4)


def _area_levels(nz: int):
    def level(k: int):
        one = UPoly.from_rows({0: {0: 1}}, nz)
        if k == 0:
            return one, one
        if k == 1:
            t = UPoly.from_rows({1: {1: 2}}, nz)
            return t, one - t
        t = UPoly.from_rows({k: {1: 1}}, nz)
        return t, one - 3 * t
    return level


def _area_y_bound(nz: int) -> int:
    # an axis path of width 4n covers at most n(n+1)/2 circles
    return nz * (nz + 1) // 2 + 1


def A_area_cf(order: int) -> UPoly:
    """Axis paths by width and area from the continued fraction (``y`` marks area)."""
    nz = _z_order(order)
    ny = _area_y_bound(nz)
    res = cf_eval(_area_levels(nz), nz, (nz, ny))
    return res.stretch_x(4).truncate(order) if res.x_order * 4 > order else res.stretch_x(4)


def A_area_1y(order: int) -> IntSeries:
    """``A(1, y)`` for the area, as a series in ``y``."""
    def level(k: int):
        y = _x(order)
        if k == 0:
            return IntSeries.one(order), IntSeries.one(order)
        if k == 1:
            return 2 * y, 1 - 2 * y
        return y**k, 1 - 3 * y**k
    return cf_eval(level, order, order)


def _zy(nz: int, rows: dict[int, dict[int, int]], ny: int) -> UPoly:
    """Polynomial from ``{y_exponent: {z_exponent: coeff}}``."""
    return UPoly.from_rows(rows, nz, ny)


def _kiss_A_z(nz: int) -> UPoly:
    ny = 2 * nz + 2
    Nz = nz + 1
    Ny = ny + 2
    rad = _zy(Nz, {0: {0: 1}, 1: {1: -8}, 2: {1: -2, 2: 16}, 3: {2: -8}, 4: {2: 1}}, Ny)
    num = _zy(Nz, {0: {0: 1}, 1: {1: -4}, 2: {1: 3}}, Ny) - rad.sqrt()
    return (num.shift_u(-2).shift_x(-1) / 4).truncate(nz)


def _inch_A_z(nz: int) -> UPoly:
    ny = 2 * nz + 2
    Nz = nz + 1
    Ny = ny + 2
    rad = _zy(Nz, {0: {0: 1}, 1: {1: -2}, 2: {1: -2, 2: 1}, 3: {2: -2}, 4: {2: 1}}, Ny)
    num = _zy(Nz, {0: {0: 1}, 1: {1: -1}, 2: {1: 1}}, Ny) - rad.sqrt()
    return (num.shift_u(-2).shift_x(-1) / 2).truncate(nz)


def _exact_in_y(p: UPoly) -> UPoly:
    # within the x-truncation every y-power beyond the bound vanishes
    return UPoly(p.terms, p.x_order, None)


def A_kiss(order: int) -> UPoly:
    """Axis paths by width and kissing number (``y`` marks kissing number)."""
    nz = _z_order(order)
    A = _exact_in_y(_kiss_A_z(nz)).stretch_x(4)
    return A.truncate(order)


def B_kiss(order: int) -> UPoly:
    """Elevated paths by width and kissing number: ``(A - 1)/(x^2 A)``."""
    nz = _z_order(order + 2) + 1
    A = _kiss_A_z(nz).stretch_x(4)
    B = ((A - 1) / A).shift_x(-2)
    return _exact_in_y(B).truncate(order)


def A_inch(order: int) -> UPoly:
    nz = _z_order(order)
    return _exact_in_y(_inch_A_z(nz)).stretch_x(4).truncate(order)


def B_inch(order: int) -> UPoly:
    """``(A' - 1)/x^2``."""
    nz = _z_order(order + 2) + 1
    A = _inch_A_z(nz).stretch_x(4)
    return _exact_in_y((A - 1).shift_x(-2)).truncate(order)


def A_kiss_1y(order: int) -> IntSeries:
    """``(1 - 4y + 3y^2 - (1 - y) sqrt(1 - 6y + y^2)) / (4y^2)``."""
    P = order + 2
    y = _x(P)
    num = 1 - 4 * y + 3 * y**2 - (1 - y) * _poly([1, -6, 1], P).sqrt()
    return _fit(num.shift(-2) / 4, order)


def A_inch_1y(order: int) -> IntSeries:
    """``(1 - y + y^2 - sqrt(1 - 2y - y^2 - 2y^3 + y^4)) / (2y^2)``."""
    P = order + 2
    y = _x(P)
    num = 1 - y + y**2 - _poly([1, -2, -1, -2, 1], P).sqrt()
    return _fit(num.shift(-2) / 2, order)


def schroder_gf(order: int) -> IntSeries:
    """Large Schroeder numbers ``(1 - y - sqrt(1 - 6y + y^2)) / (2y)``."""
    P = order + 1
    y = _x(P)
    return _fit((1 - y - _poly([1, -6, 1], P).sqrt()).shift(-1) / 2, order)


# ---- catalog ------------------------------------------------------------------------

_UNIVARIATE: dict[str, Callable[[int], IntSeries]] = {
    "S2_x": S2_x,
    "S2_x0": S2_x0,
    "r2": r2,
    "s2": s2,
    "g00_2": g00_2,
    "S3_x": S3_x,
    "S3_x0": S3_x0,
    "r3": r3,
    "s3": s3,
    "g00_3": g00_3,
    "A_area_1y": A_area_1y,
    "A_kiss_1y": A_kiss_1y,
    "A_inch_1y": A_inch_1y,
    "schroder": schroder_gf,
}

_BIVARIATE: dict[str, Callable[[int], UPoly]] = {
    "S2_xu": S2_xu,
    "F0": F0,
    "F1": F1,
    "G0": G0,
    "G1": G1,
    "H0": H0,
    "H1": H1,
    "S3_xu": S3_xu,
    "A_area_cf": A_area_cf,
    "A_kiss": A_kiss,
    "B_kiss": B_kiss,
    "A_inch": A_inch,
    "B_inch": B_inch,
}

CATALOG = tuple(sorted(set(_UNIVARIATE) | set(_BIVARIATE)))


def gf(name: str, order: int) -> IntSeries | UPoly:
    """Exact expansion of the named generating function to ``O(x^order)``."""
    if name in _UNIVARIATE:
        if not 0 <= order <= MAX_ORDER:
            raise OrderTooLarge(f"order {order} outside 0..{MAX_ORDER}")
        return _UNIVARIATE[name](order).assert_integral()
    if name in _BIVARIATE:
        if not 0 <= order <= MAX_BIVARIATE_ORDER:
            raise OrderTooLarge(f"order {order} outside 0..{MAX_BIVARIATE_ORDER}")
        p = _BIVARIATE[name](order)
        if not p.is_integral():
            raise SeriesError(f"{name} has a non-integral coefficient")
        return p
    raise UnknownName(name)


# ---- coefficient formulas: width statistic ----------------------------------------------

def coeff_w2(n: int, k: int) -> int:
    """``w(4n - 2k, k) = [x^(4n-2k)] r^k``."""
    if n < 1 or k < 0:
        raise IndexOutOfDomain("need n >= 1 and k >= 0")
    if k > n:
        return 0
    total = sum(3 ** (n - k - l) * comb(n + l - 1, l) * comb(n, n - k - l) for l in range(n - k + 1))
    q = Fraction(k * total, n)
    if q.denominator != 1:
        raise ArithmeticError("non-integral value")
    return q.numerator


def w2(m: int, k: int) -> int:
    """``[x^m] r^k`` for any ``m, k >= 0`` (zero off the ``m = 2k mod 4`` lattice)."""
    if k == 0:
        return 1 if m == 0 else 0
    if m < 0 or (m + 2 * k) % 4:
        return 0
    n = (m + 2 * k) // 4
    if n < 1:
        return 0
    return coeff_w2(n, k)


def s2_closed(size: int, height: int) -> int:
    """Number of partial paths of the given width and height, from the ``w`` relations."""
    if size < 0 or height < 0:
        raise IndexOutOfDomain("need size, height >= 0")
    if height % 2 == 0:
        k = height // 2
        if (size + 2 * k) % 4:
            return 0
        n = (size + 2 * k) // 4
        v = w2(4 * n - 2 * k, k) + w2(4 * n - 2 * k + 2, k + 1)
        return v // 2
    k = (height - 1) // 2
    if (size + 2 * k + 1) % 4 == 0:
        n = (size + 2 * k + 1) // 4
        return (w2(4 * n - 2 * k + 2, k + 1) - w2(4 * n - 2 * k, k)) // 2
    if (size + 2 * k - 1) % 4 == 0:
        n = (size + 2 * k - 1) // 4
        return w2(4 * n - 2 * k + 2, k + 1)
    return 0


def axis_width_closed(n: int) -> int:
    """Axis paths of width ``4n``: ``(2/n) sum_k 4^k C(n,k) C(n,k+1)``."""
    if n < 0:
        raise IndexOutOfDomain("need n >= 0")
    if n == 0:
        return 1
    total = sum(4**k * comb(n, k) * comb(n, k + 1) for k in range(n + 1))
    return 2 * total // n


def lagrange_rhat(n: int, k: int) -> int:
    """``(k/n) [x^(n-k)] ((1+3x)/(1-x))^n`` evaluated by series arithmetic."""
    if n < 1 or k < 1:
        raise IndexOutOfDomain("need n, k >= 1")
    if k > n:
        return 0
    N = n - k + 1
    x = _x(N)
    phi = ((1 + 3 * x) / (1 - x)) ** n
    q = Fraction(k * phi[n - k], n)
    if q.denominator != 1:
        raise ArithmeticError("non-integral value")
    return q.numerator


# ---- coefficient formulas: step statistic -------------------------------------------------

def _mcomb(m: int, l: int) -> int:
    """Multiset coefficient ``C(m + l - 1, l)`` with ``C(-1, 0) = 1``."""
    if l == 0:
        return 1
    if m <= 0:
        return 0
    return comb(m + l - 1, l)


def t_coeff(n: int, m: int) -> int:
    """``[x^n] (1 - x^2 - 2x^3)^(-m)``."""
    if n < 0 or m < 0:
        raise IndexOutOfDomain("need n, m >= 0")
    return sum(_mcomb(m, l) * comb(l, n - 2 * l) * 2 ** (n - 2 * l) for l in range(n // 2 + 1) if n - 2 * l <= l)


def r3_power_coeff(n: int, m: int) -> int:
    """``[x^n] r^m`` for the step-statistic root via powers of the Catalan series.

    The ``m = 0`` weight ``m/(m+2k)`` is read as 1 at ``k = 0`` and 0 otherwise.
    """
    if n < 0 or m < 0:
        return 0
    if m == 0:
        return 1 if n == 0 else 0
    total = Fraction(0)
    for k in range((n - 2 * m) // 4 + 1) if n >= 2 * m else ():
        total += Fraction(m, m + 2 * k) * comb(m + 2 * k, k) * t_coeff(n - 4 * k - 2 * m, 2 * k + m)
    if total.denominator != 1:
        raise ArithmeticError("non-integral value")
    return total.numerator


def coeff_w3(n: int, k: int) -> int:
    """``w(n, k) = sum_i (-1)^i [x^(n-i)] r^k`` (that is ``[x^n] r^k / (1 + x)``)."""
    if k < 0:
        raise IndexOutOfDomain("need k >= 0")
    if n < 0:
        return 0
    return sum((-1) ** i * r3_power_coeff(n - i, k) for i in range(n + 1))


def s3_closed(n: int, height: int) -> int:
    """Number of partial paths with ``n`` steps ending at ``height``."""
    if n < 0 or height < 0:
        raise IndexOutOfDomain("need n, height >= 0")
    if height % 2 == 0:
        k = height // 2
        return coeff_w3(n, k) + coeff_w3(n + 1, k + 1)
    k = (height + 1) // 2
    return coeff_w3(n, k + 1) + 2 * coeff_w3(n - 1, k) + 2 * coeff_w3(n, k) + coeff_w3(n + 1, k)


def axis_steps_closed(n: int) -> int:
    """Axis paths with ``n`` steps: ``sum_k C(2k,k)/(k+1) C(n-2k-1, n-3k)``."""
    if n < 0:
        raise IndexOutOfDomain("need n >= 0")
    if n == 0:
        return 1
    return sum(comb(2 * k, k) // (k + 1) * comb(n - 2 * k - 1, n - 3 * k) for k in range(n // 3 + 1))


# ---- kissing number, Schroeder, Narayana ---------------------------------------------------

def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def schroder_r(n: int) -> int:
    """Large Schroeder number ``sum_k C(n+k, 2k) C_k``."""
    if n < 0:
        raise IndexOutOfDomain("need n >= 0")
    return sum(comb(n + k, 2 * k) * catalan(k) for k in range(n + 1))


def kiss_total_closed(n: int) -> int:
    """Axis paths with kissing number ``n``: ``(1/2) sum_{k=1}^{n+1} C(n+k, 2k-1) C_k``."""
    if n < 0:
        raise IndexOutOfDomain("need n >= 0")
    if n == 0:
        return 1
    return sum(comb(n + k, 2 * k - 1) * catalan(k) for k in range(1, n + 2)) // 2


def kiss_total_schroder(n: int) -> int:
    """The same totals as ``(r_(n+1) - r_n) / 2``."""
    if n < 1:
        raise IndexOutOfDomain("need n >= 1")
    return (schroder_r(n + 1) - schroder_r(n)) // 2


def narayana(n: int, k: int) -> int:
    if n < 1 or k < 1:
        raise IndexOutOfDomain("need n, k >= 1")
    if k > n:
        return 0
    return comb(n - 1, k - 1) * comb(n, k - 1) // k


def inchworm_closed(width: int, kiss: int) -> int:
    """Inchworm paths of the given width and kissing number (a Narayana number)."""
    if width < 0 or kiss < 0:
        raise IndexOutOfDomain("need width, kiss >= 0")
    if width == 0:
        return 1 if kiss == 0 else 0
    if width % 4:
        return 0
    n = width // 4
    k = kiss - n + 1
    if k < 1 or k > n:
        return 0
    return narayana(n, k)


# ---- asymptotics ---------------------------------------------------------------------------

_SQRT_PI = math.sqrt(math.pi)

ASYMPTOTES: dict[str, Callable[[float], float]] = {
    "axis_width": lambda n: 3 ** (1 + 2 * n) / (_SQRT_PI * (1 + 2 * n) ** 1.5),
    "total_steps": lambda n: 2 ** (n + 1) / math.sqrt(math.pi * n),
    "axis_steps": lambda n: 2 ** (n + 1) / (_SQRT_PI * n**1.5),
    "exp_height_width": lambda n: math.sqrt(math.pi * n / 2),
    "exp_height_steps": lambda n: 17 * math.sqrt(math.pi * n) / 27,
}

_LOG_ASYMPTOTES: dict[str, Callable[[float], float]] = {
    "axis_width": lambda n: (1 + 2 * n) * math.log(3) - 0.5 * math.log(math.pi) - 1.5 * math.log(1 + 2 * n),
    "total_steps": lambda n: (n + 1) * math.log(2) - 0.5 * math.log(math.pi * n),
    "axis_steps": lambda n: (n + 1) * math.log(2) - 0.5 * math.log(math.pi) - 1.5 * math.log(n),
}


def asymptote(name: str, n: float) -> float:
    try:
        fn = ASYMPTOTES[name]
    except KeyError:
        raise UnknownName(name) from None
    try:
        return fn(n)
    except OverflowError:
        return math.inf


def log_asymptote(name: str, n: float) -> float:
    """Natural log of the asymptote; usable far beyond float range."""
    if name in _LOG_ASYMPTOTES:
        return _LOG_ASYMPTOTES[name](n)
    return math.log(asymptote(name, n))


def ratio_to_asymptote(name: str, n: int, exact: int) -> float:
    """``exact / asymptote`` computed through logarithms."""
    return math.exp(_log_int(exact) - log_asymptote(name, n))


def _log_int(v: int) -> float:
    if v <= 0:
        raise ValueError("need a positive integer")
    b = v.bit_length()
    if b < 1000:
        return math.log(v)
    shift = b - 64
    return math.log(v >> shift) + shift * math.log(2)
