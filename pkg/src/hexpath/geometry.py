"""Integer geometry of the circle lattice and the brute-force enumeration oracle.

Circle centers sit at integer points ``(x, h)`` with ``h`` even, ``h >= 0``,
``x >= 2`` and ``x + h = 2 (mod 4)``; path vertices are the tangency points.
An axis path of width ``n`` is closed into a polygon through ``(n, -1)`` and
``(0, -1)`` and centers are classified by even-odd ray casting.
"""
from __future__ import annotations

import os
from typing import Iterator, NamedTuple

import numpy as np

from . import kernels
from .errors import LimitTooLarge, NotAxisPath
from .steps import PackingPath, Step, START, ordered_successors, vertices
from .tables import AxisPolyTable, StatTable, poly_from_pairs

DEFAULT_MAX_WIDTH = 32
DEFAULT_MAX_STEPS = 20

# vertex minus center for every tangency point of a circle
_TOUCH_OFFSETS = ((2, 0), (-2, 0), (1, 1), (1, -1), (-1, 1), (-1, -1))


class CircleCenter(NamedTuple):
    x: int
    h: int

    @staticmethod
    def valid(x: int, h: int) -> bool:
        return h >= 0 and h % 2 == 0 and x >= 2 and (x + h) % 4 == 2


def max_width_bound() -> int:
    env = os.environ.get("HEXPATH_MAX_WIDTH")
    return int(env) if env else DEFAULT_MAX_WIDTH


def _require_axis(path: PackingPath) -> None:
    if not path.ends_on_axis:
        raise NotAxisPath(f"path ends at height {path.height}, not on the axis")


def region_polygon(path: PackingPath) -> list[tuple[int, int]]:
    """Vertex list of the closed region below an axis path."""
    _require_axis(path)
    n = path.width
    return vertices(path) + [(n, -1), (0, -1)]


def circles_below(path: PackingPath) -> set[CircleCenter]:
    _require_axis(path)
    if path.nbsteps == 0:
        return set()
    poly = region_polygon(path)
    top = max(h for _, h in poly)
    cand = [(x, h) for h in range(0, top + 1, 2) for x in range(2, path.width + 1) if (x + h) % 4 == 2]
    if not cand:
        return set()
    px = np.array([p[0] for p in poly], dtype=np.int64)
    py = np.array([p[1] for p in poly], dtype=np.int64)
    qx = np.array([c[0] for c in cand], dtype=np.int64)
    qy = np.array([c[1] for c in cand], dtype=np.int64)
    mask = kernels.inside_mask(px, py, qx, qy)
    return {CircleCenter(*c) for c, m in zip(cand, mask) if m}


def area_of(path: PackingPath) -> int:
    return len(circles_below(path))


def touched_circles(path: PackingPath) -> set[CircleCenter]:
    out = set()
    for vx, vh in vertices(path):
        for dx, dh in _TOUCH_OFFSETS:
            cx, ch = vx - dx, vh - dh
            if CircleCenter.valid(cx, ch):
                out.add(CircleCenter(cx, ch))
    return out


def kissing_of(path: PackingPath) -> int:
    return len(touched_circles(path) & circles_below(path))


def enumerate_paths(
    max_width: int | None = None,
    max_steps: int | None = None,
    axis_only: bool = False,
    exact: bool = False,
) -> Iterator[PackingPath]:
    """Every valid path within the limit, once each, in lexicographic step order.

    Exactly one of ``max_width``/``max_steps`` is given.  With ``exact`` only
    paths whose size equals the limit are yielded.
    """
    if (max_width is None) == (max_steps is None):
        raise ValueError("give exactly one of max_width and max_steps")
    by_steps = max_steps is not None
    limit = max_steps if by_steps else max_width
    bound = DEFAULT_MAX_STEPS if by_steps else max_width_bound()
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    if limit > bound:
        raise LimitTooLarge(f"limit {limit} exceeds the safety bound {bound}")
    return _dfs(limit, by_steps, axis_only, exact)


def _dfs(limit: int, by_steps: bool, axis_only: bool, exact: bool) -> Iterator[PackingPath]:
    prefix: list[Step] = []

    def emit(size: int, h: int) -> bool:
        return (not axis_only or h == 0) and (not exact or size == limit)

    def rec(prev, size: int, h: int):
        for s in ordered_successors(prev, h):
            ns = size + (1 if by_steps else s.dx)
            nh = h + s.dh
            if ns > limit or (axis_only and nh > limit - ns):
                continue
            prefix.append(s)
            if emit(ns, nh):
                yield PackingPath(prefix)
            yield from rec(s, ns, nh)
            prefix.pop()

    if emit(0, 0):
        yield PackingPath(())
    yield from rec(START, 0, 0)


_PAIRS = {("width", "height"), ("steps", "height"), ("width", "area"), ("width", "kiss")}


def brute_stat_table(pair: tuple[str, str], limit: int) -> StatTable:
    """Exact table by full enumeration (``kernels.dfs_count`` for heights)."""
    pair = tuple(pair)
    if pair not in _PAIRS:
        raise ValueError(f"unsupported statistic pair {pair}")
    size, sec = pair
    bound = DEFAULT_MAX_STEPS if size == "steps" else max_width_bound()
    if limit > bound:
        raise LimitTooLarge(f"limit {limit} exceeds the safety bound {bound}")
    if sec == "height":
        counts = kernels.dfs_count(limit, size == "steps")
        ent = {(n, k): int(counts[n, k]) for n in range(limit + 1) for k in range(limit + 1) if counts[n, k]}
        return StatTable(size, sec, ent, limit)
    stat = area_of if sec == "area" else kissing_of
    ent: dict[tuple[int, int], int] = {}
    for p in enumerate_paths(max_width=limit, axis_only=True):
        key = (p.width, stat(p))
        ent[key] = ent.get(key, 0) + 1
    return StatTable(size, sec, ent, limit)


def brute_axis_polys(flavor: str, max_width: int) -> AxisPolyTable:
    """Area, kiss or inchworm-kiss polynomials by enumeration."""
    from .steps import is_inchworm

    rows: dict[int, list[tuple[int, int]]] = {w: [] for w in range(0, max_width + 1, 4)}
    for p in enumerate_paths(max_width=max_width, axis_only=True):
        if flavor == "area":
            rows[p.width].append((area_of(p), 1))
        elif flavor == "kiss":
            rows[p.width].append((kissing_of(p), 1))
        elif flavor == "inchworm":
            if is_inchworm(p):
                rows[p.width].append((kissing_of(p), 1))
        else:
            raise ValueError(f"unknown flavor {flavor!r}")
    return AxisPolyTable(flavor, {w: poly_from_pairs(r) for w, r in rows.items()}, max_width)
