"""Agreement suites: DP vs enumeration vs closed forms, bijections, Riordan identities.

Every check yields a :class:`Check`; a failing check carries the first
counterexample in ``detail``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import bijections, closed_forms as cf, counters, geometry, riordan
from .series import UPoly
from .steps import is_inchworm
from .tables import AxisPolyTable, StatTable

SUITES = ("height", "area", "kiss", "bijections", "riordan", "closedforms")
DEFAULT_MAX_WIDTH = 16
DEFAULT_MAX_STEPS = 12


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""

    def to_json_obj(self) -> dict:
        return {"suite": self.suite, "name": self.name, "pass": self.passed, "detail": self.detail}


def table_from_upoly(p: UPoly, statistic: str, by: str, bound: int) -> StatTable:
    return StatTable.from_rows(statistic, by, {n: p.x_slice(n) for n in range(bound + 1)}, bound)


def _first_table_diff(a: StatTable, b: StatTable, bound: int) -> str:
    d = a.diff(b, bound)
    if not d:
        return ""
    n, k, x, y = d[0]
    return f"({n},{k}): {x} != {y}"


def _first_poly_diff(a: AxisPolyTable, b: AxisPolyTable | UPoly, bound: int) -> str:
    for w in range(0, bound + 1, 4):
        pa = {k: v for k, v in a.poly(w).items() if v}
        raw = b.x_slice(w) if isinstance(b, UPoly) else b.poly(w)
        pb = {k: v for k, v in raw.items() if v}
        if pa != pb:
            k = min(set(pa) ^ set(pb) | {k for k in pa if pa.get(k) != pb.get(k)})
            return f"width {w}, y^{k}: {pa.get(k, 0)} != {pb.get(k, 0)}"
    return ""


def _check(suite: str, name: str, detail: str) -> Check:
    return Check(suite, name, not detail, detail)


def _even4(n: int) -> int:
    return n - n % 4


# ---- suites -----------------------------------------------------------------------------

def suite_height(max_width: int, max_steps: int) -> Iterator[Check]:
    w = counters.width_height_table(max_width)
    yield _check("height", "width: dp = brute", _first_table_diff(w, geometry.brute_stat_table(("width", "height"), max_width), max_width))
    yield _check("height", "width: dp = series", _first_table_diff(w, table_from_upoly(cf.S2_xu(max_width + 1), "width", "height", max_width), max_width))
    s = counters.steps_height_table(max_steps)
    yield _check("height", "steps: dp = brute", _first_table_diff(s, geometry.brute_stat_table(("steps", "height"), max_steps), max_steps))
    yield _check("height", "steps: dp = series", _first_table_diff(s, table_from_upoly(cf.S3_xu(max_steps + 1), "steps", "height", max_steps), max_steps))


def _axis_suite(flavor: str, max_width: int, dp, closed) -> Iterator[Check]:
    m = _even4(max_width)
    table = dp(m)
    yield _check(flavor, f"{flavor}: dp = geometry", _first_poly_diff(table, geometry.brute_axis_polys(flavor, m), m))
    yield _check(flavor, f"{flavor}: dp = closed form", _first_poly_diff(table, closed(m + 1), m))


def suite_area(max_width: int, max_steps: int) -> Iterator[Check]:
    yield from _axis_suite("area", max_width, counters.area_polys, cf.A_area_cf)


def suite_kiss(max_width: int, max_steps: int) -> Iterator[Check]:
    yield from _axis_suite("kiss", max_width, counters.kiss_polys, cf.A_kiss)
    yield from _axis_suite("inchworm", max_width, counters.inchworm_polys, cf.A_inch)


def _image_check(name: str, images: Iterable[tuple[int, tuple]], codomain: Callable[[int], Iterable], sizes) -> str:
    seen: dict[int, set] = {}
    for size, img in images:
        bucket = seen.setdefault(size, set())
        if img in bucket:
            return f"{name}: image {' '.join(img)} hit twice"
        bucket.add(img)
    for n in sizes:
        expect = {p.steps for p in codomain(n)}
        if seen.get(n, set()) != expect:
            miss = sorted(expect - seen.get(n, set()))
            return f"{name}: size {n} image misses {' '.join(miss[0]) if miss else '?'}"
    return ""


def suite_bijections(max_width: int, max_steps: int) -> Iterator[Check]:
    m = _even4(max_width)
    axis = list(geometry.enumerate_paths(max_width=m, axis_only=True))

    def skew():
        for p in axis:
            img = bijections.to_skew_dyck(p)
            if img.semilength * 4 != p.width:
                raise AssertionError(f"semilength of f({p}) is not width/4")
            yield p.width // 4, img.steps

    def motz():
        for p in geometry.enumerate_paths(max_steps=max_steps, axis_only=True):
            img = bijections.to_qmotzkin(p)
            if len(img) != p.nbsteps:
                raise AssertionError(f"g({p}) has the wrong length")
            yield p.nbsteps, img.steps

    inch = [p for p in axis if is_inchworm(p)]

    def dyck():
        for p in inch:
            img = bijections.inchworm_to_dyck(p)
            n, k = p.width // 4, geometry.kissing_of(p)
            if img.peaks != 2 * n - k:
                raise AssertionError(f"peaks of the Dyck image of {p} differ from 2n - kiss")
            yield n, img.steps

    def peakless():
        for p in inch:
            img = bijections.inchworm_to_peakless(p)
            if len(img) != geometry.kissing_of(p):
                raise AssertionError(f"peakless image of {p} has length != kiss")
            yield len(img), img.steps

    cases = [
        ("skew Dyck", skew, bijections.enumerate_skew_dyck, range(m // 4 + 1)),
        ("QMotzkin", motz, bijections.enumerate_qmotzkin, range(max_steps + 1)),
        ("Dyck", dyck, bijections.enumerate_dyck, range(m // 4 + 1)),
        # kiss k is complete once every width up to 4k has been enumerated
        ("peakless", peakless, bijections.enumerate_peakless, range(m // 4 + 1)),
    ]
    for name, gen, codomain, sizes in cases:
        try:
            detail = _image_check(name, gen(), codomain, sizes)
        except Exception as e:  # reported as a failed check
            detail = f"{name}: {type(e).__name__}: {e}"
        yield _check("bijections", name, detail)


RIORDAN_SIZE = 12


def suite_riordan(max_width: int, max_steps: int) -> Iterator[Check]:
    for which in riordan.ARRAYS:
        a = riordan.build_from_counts(which, RIORDAN_SIZE)
        b = riordan.build_from_closed_pair(which, RIORDAN_SIZE)
        detail = ""
        if a != b:
            n, k = next((n, k) for n in range(RIORDAN_SIZE) for k in range(RIORDAN_SIZE) if a.rows[n][k] != b.rows[n][k])
            detail = f"{which}[{n}][{k}]: {a.rows[n][k]} != {b.rows[n][k]}"
        yield _check("riordan", f"{which}: counts = pair", detail)
    se2 = riordan.build_from_counts("Se2", RIORDAN_SIZE)
    A = riordan.a_sequence(se2)
    Z = riordan.z_sequence(se2)
    wantA = [1] + [4] * (len(A) - 1)
    wantZ = [2 if i % 2 == 0 else 6 for i in range(len(Z))]
    yield _check("riordan", "Se2: A = (1,4,4,...)", "" if A == wantA else f"A = {A}")
    yield _check("riordan", "Se2: Z = (2,6,2,6,...)", "" if Z == wantZ else f"Z = {Z}")
    yield _check("riordan", "Se2: A and Z regenerate rows", "" if riordan.check_az(se2, wantA, wantZ) else "row mismatch")
    ident = se2 @ riordan.inverse(se2)
    yield _check("riordan", "Se2 * Se2^-1 = I", "" if ident == riordan.identity(RIORDAN_SIZE) else "product is not the identity")


def suite_closedforms(max_width: int, max_steps: int) -> Iterator[Check]:
    bw = max(max_width, 20)
    w = counters.width_height_table(bw)
    bad = next(((n, k) for n in range(bw + 1) for k in range(n + 1) if cf.s2_closed(n, k) != w.get(n, k)), None)
    yield _check("closedforms", "width: coefficient formula = dp", "" if bad is None else f"s{bad}: {cf.s2_closed(*bad)} != {w.get(*bad)}")
    s = counters.steps_height_table(20)
    bad = next(((n, k) for n in range(21) for k in range(n + 1) if cf.s3_closed(n, k) != s.get(n, k)), None)
    yield _check("closedforms", "steps: coefficient formula = dp", "" if bad is None else f"s{bad}: {cf.s3_closed(*bad)} != {s.get(*bad)}")
    ax = counters.axis_counts(24)
    got = [cf.axis_width_closed(n) for n in range(len(ax))]
    yield _check("closedforms", "axis width: binomial sum = dp", "" if got == ax else f"{got} != {ax}")
    got = [cf.axis_steps_closed(n) for n in range(21)]
    want = [s.get(n, 0) for n in range(21)]
    yield _check("closedforms", "axis steps: binomial sum = dp", "" if got == want else f"{got} != {want}")
    kt = cf.gf("A_kiss_1y", 13)
    bad = next((n for n in range(1, 13) if not (cf.kiss_total_closed(n) == cf.kiss_total_schroder(n) == kt[n])), None)
    yield _check("closedforms", "kiss totals: binomial = Schroeder = series", "" if bad is None else f"n = {bad}")
    ip = counters.inchworm_polys(32)
    bad = next(((w, k) for w in range(0, 33, 4) for k in range(17) if cf.inchworm_closed(w, k) != ip.poly(w).get(k, 0)), None)
    yield _check("closedforms", "inchworm: Narayana = dp", "" if bad is None else f"width {bad[0]}, kiss {bad[1]}")


_SUITE_FUNCS = {
    "height": suite_height,
    "area": suite_area,
    "kiss": suite_kiss,
    "bijections": suite_bijections,
    "riordan": suite_riordan,
    "closedforms": suite_closedforms,
}


def run(suite: str, max_width: int = DEFAULT_MAX_WIDTH, max_steps: int = DEFAULT_MAX_STEPS) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    out: list[Check] = []
    for name in names:
        if name not in _SUITE_FUNCS:
            raise ValueError(f"unknown suite {name!r}")
        out.extend(_SUITE_FUNCS[name](max_width, max_steps))
    return out


def summary(checks: list[Check]) -> Counter:
    return Counter("pass" if c.passed else "fail" for c in checks)
