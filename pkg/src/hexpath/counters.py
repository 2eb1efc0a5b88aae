"""Exact dynamic-programming counters.

Heights are counted by a transfer DP over ``(last step, height)``; area and
kissing number by the first-return decomposition of axis paths:

* an *A-path* is an axis path (possibly empty): ``A = U B D A``;
* a *B-path* is the lifted part between the first ``U`` and its return ``D``,
  in one of four forms ``F``, ``F Fb R``, ``Ub Q Db`` and ``Ub Q Db Fb R``
  with ``Q`` an A-path and ``R`` a B-path.

A-paths have width ``0 (mod 4)`` and B-paths width ``2 (mod 4)``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import kernels
from .errors import BoundExceeded
from .steps import Step
from .tables import AxisPolyTable, StatTable

DEFAULT_BOUND = 400
DEFAULT_POLY_BOUND = 200

# predecessors of each step; None is the start of the path
_PREDS: dict[Step, tuple[Step | None, ...]] = {
    Step.U: (Step.Ub, Step.D, None),
    Step.F: (Step.U, Step.Fb),
    Step.D: (Step.F, Step.Db),
    Step.Ub: (Step.U, Step.Fb),
    Step.Fb: (Step.F, Step.Db),
    Step.Db: (Step.Ub, Step.D),
}


def _check(n: int, bound: int) -> None:
    if n < 0:
        raise ValueError("size must be nonnegative")
    if n > bound:
        raise BoundExceeded(f"{n} exceeds the configured bound {bound}")


def _height_layers(N: int, by_steps: bool) -> list[list[list[int]]]:
    """``layers[n][s][h]``: partial paths of size ``n`` ending with step ``s`` at height ``h``."""
    H = N + 2
    layers: list[list[list[int]]] = [[[0] * H for _ in Step]]
    for n in range(1, N + 1):
        cur = [[0] * H for _ in Step]
        for s in Step:
            w = 1 if by_steps else s.dx
            if n - w < 0:
                continue
            src = layers[n - w]
            row = cur[s]
            dh = s.dh
            for h in range(max(0, dh), H - max(0, dh) if dh > 0 else H):
                ph = h - dh
                if ph < 0 or ph >= H:
                    continue
                v = 0
                for p in _PREDS[s]:
                    if p is None:
                        if n - w == 0 and ph == 0:
                            v += 1
                    else:
                        v += src[p][ph]
                row[h] = v
        layers.append(cur)
    return layers


def _table_from_layers(layers, statistic: str, N: int) -> StatTable:
    ent = {(0, 0): 1}
    for n in range(1, N + 1):
        col = [sum(layers[n][s][h] for s in Step) for h in range(N + 2)]
        for h, c in enumerate(col):
            if c:
                ent[(n, h)] = c
    return StatTable(statistic, "height", ent, N)


@lru_cache(maxsize=8)
def _height_table_cached(N: int, by_steps: bool) -> StatTable:
    return _table_from_layers(_height_layers(N, by_steps), "steps" if by_steps else "width", N)


def width_height_table(N: int, bound: int = DEFAULT_BOUND) -> StatTable:
    _check(N, bound)
    return _copy(_height_table_cached(N, False))


def steps_height_table(N: int, bound: int = DEFAULT_BOUND) -> StatTable:
    _check(N, bound)
    return _copy(_height_table_cached(N, True))


def _copy(t: StatTable) -> StatTable:
    return StatTable(t.statistic, t.by, dict(t.entries), t.bound)


def expected_height(n: int, statistic: str = "width", mode: str = "exact"):
    """Mean final height over all partial paths of size ``n``."""
    if statistic not in ("width", "steps"):
        raise ValueError(f"unknown statistic {statistic!r}")
    by_steps = statistic == "steps"
    if mode == "exact":
        _check(n, DEFAULT_BOUND)
        row = _height_table_cached(n, by_steps).row(n)
        return Fraction(sum(k * c for k, c in row.items()), sum(row.values()))
    if mode == "float":
        _check(n, 100_000)
        return kernels.height_moment_float(n, by_steps)
    raise ValueError(f"unknown mode {mode!r}")


# ---- decomposition DPs --------------------------------------------------------

Poly = dict[int, int]


def _padd(acc: Poly, p: Poly, shift: int = 0, scale: int = 1) -> None:
    for e, c in p.items():
        acc[e + shift] = acc.get(e + shift, 0) + c * scale


def _pmul(a: Poly, b: Poly) -> Poly:
    out: Poly = {}
    for i, ci in a.items():
        for j, cj in b.items():
            out[i + j] = out.get(i + j, 0) + ci * cj
    return out


def _clean(p: Poly) -> Poly:
    return {e: c for e, c in sorted(p.items()) if c}


def _decomposition(max_width: int, flavor: str) -> tuple[dict[int, Poly], dict[int, Poly]]:
    """Run the A/B recursion up to ``max_width``; return ``(A, B)`` keyed by width."""
    A: dict[int, Poly] = {0: {0: 1}}
    B: dict[int, Poly] = {}
    for w in range(2, max_width + 1, 2):
        if w % 4 == 2:
            B[w] = _clean(_b_form(w, A, B, flavor))
        else:
            A[w] = _clean(_a_form(w, A, B, flavor))
    return A, B


def _a_form(w: int, A, B, flavor: str) -> Poly:
    acc: Poly = {}
    if flavor == "inchworm":
        # U B D with nothing after it: a trailing A would create the factor D U
        return dict(B.get(w - 2, {}))
    for wq in range(2, w - 1, 4):
        wr = w - 2 - wq
        if flavor == "area":
            # the lifted part contributes its own area plus the bottom row under it
            shift = (2 + wq) // 4
            _padd(acc, _pmul(B[wq], A[wr]), shift)
        else:
            _padd(acc, _pmul(B[wq], A[wr]))
    return acc


def _b_form(w: int, A, B, flavor: str) -> Poly:
    acc: Poly = {}
    if flavor == "area":
        if w == 2:
            _padd(acc, {0: 1})                             # F
        if w >= 6:
            _padd(acc, B[w - 4])                           # F Fb R
        if w - 2 >= 0 and (w - 2) % 4 == 0:
            _padd(acc, A[w - 2])                           # Ub Q Db
        for wq in range(0, w - 5, 4):                      # Ub Q Db Fb R
            wr = w - 4 - wq
            _padd(acc, _pmul(A[wq], B[wr]))
        return acc
    if flavor == "kiss":
        if w == 2:
            _padd(acc, {1: 1})
            _padd(acc, {1: 1})                             # Ub Db
        else:
            _padd(acc, B[w - 4], 1)                        # F Fb R
            _padd(acc, A[w - 2], 2)                        # Ub Q Db, Q nonempty
            _padd(acc, B[w - 4], 1)                        # Ub Db Fb R
        for wq in range(4, w - 5, 4):                      # Ub Q Db Fb R, Q nonempty
            _padd(acc, _pmul(A[wq], B[w - 4 - wq]), 2)
        return acc
    if flavor == "inchworm":
        # no Ub Db factor, so Q is never empty in the Ub-forms
        if w == 2:
            _padd(acc, {1: 1})                             # F
        else:
            _padd(acc, B[w - 4], 1)                        # F Fb R
            _padd(acc, A[w - 2], 2)                        # Ub Q Db
        for wq in range(4, w - 5, 4):
            _padd(acc, _pmul(A[wq], B[w - 4 - wq]), 2)     # Ub Q Db Fb R
        return acc
    raise ValueError(f"unknown flavor {flavor!r}")


def _axis_polys(flavor: str, max_width: int, bound: int) -> AxisPolyTable:
    _check(max_width, bound)
    if max_width % 4:
        raise ValueError("max_width must be a multiple of 4")
    A, _ = _decomposition(max_width, flavor)
    return AxisPolyTable(flavor, {w: A[w] for w in range(0, max_width + 1, 4)}, max_width)


def area_polys(max_width: int, bound: int = DEFAULT_POLY_BOUND) -> AxisPolyTable:
    return _axis_polys("area", max_width, bound)


def kiss_polys(max_width: int, bound: int = DEFAULT_POLY_BOUND) -> AxisPolyTable:
    return _axis_polys("kiss", max_width, bound)


def inchworm_polys(max_width: int, bound: int = DEFAULT_POLY_BOUND) -> AxisPolyTable:
    return _axis_polys("inchworm", max_width, bound)


def elevated_polys(flavor: str, max_width: int) -> dict[int, Poly]:
    """The B-class polynomials of the decomposition (width = 2 mod 4)."""
    _, B = _decomposition(max_width, flavor)
    return B


def axis_counts(max_width: int) -> list[int]:
    """Axis path counts at widths ``0, 4, 8, ...``."""
    t = width_height_table(max_width)
    return [t.get(w, 0) for w in range(0, max_width + 1, 4)]
