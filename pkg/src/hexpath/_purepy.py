"""Pure-Python implementations of the kernels in ``_ckernels.pyx``."""
from __future__ import annotations

import numpy as np

# Step codes: U=0 F=1 D=2 Ub=3 Fb=4 Db=5, start=6.
DX = (1, 2, 1, 1, 2, 1)
DH = (1, 0, -1, 1, 0, -1)
SUCC = ((1, 3), (2, 4), (0, 5), (0, 5), (1, 3), (2, 4), (0,))


def dfs_count(max_size: int, by_steps: bool, axis_only: bool = False) -> np.ndarray:
    counts = np.zeros((max_size + 1, max_size + 1), dtype=np.int64)
    counts[0, 0] = 1
    stack = [(6, 0, 0)]
    while stack:
        last, size, h = stack.pop()
        # reversed so successors pop in enumeration order
        for s in reversed(SUCC[last]):
            nh = h + DH[s]
            if nh < 0:
                continue
            ns = size + (1 if by_steps else DX[s])
            if ns > max_size:
                continue
            if axis_only and nh > max_size - ns:
                continue
            if not axis_only or nh == 0:
                counts[ns, nh] += 1
            stack.append((s, ns, nh))
    return counts


def inside_mask(px, py, qx, qy) -> np.ndarray:
    n = len(px)
    edges = [(int(px[a]), int(py[a]), int(px[(a + 1) % n]), int(py[(a + 1) % n])) for a in range(n)]
    out = np.zeros(len(qx), dtype=np.uint8)
    for i in range(len(qx)):
        x, y = int(qx[i]), int(qy[i])
        parity = 0
        for x1, y1, x2, y2 in edges:
            cross = (x2 - x1) * (y - y1) - (x - x1) * (y2 - y1)
            if cross == 0 and min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2):
                raise ValueError(f"point ({x}, {y}) lies on the polygon boundary")
            if y1 <= y < y2 or y2 <= y < y1:
                dy = y2 - y1
                if (dy > 0 and cross > 0) or (dy < 0 and cross < 0):
                    parity ^= 1
        out[i] = parity
    return out


def height_moment_float(n: int, by_steps: bool) -> float:
    if n == 0:
        return 0.0
    H = n + 2
    # layers[s] is a float vector over heights; keep the last two sizes
    zero = np.zeros((6, H))
    prev2, prev1 = zero.copy(), zero.copy()
    for size in range(1, n + 1):
        cur = np.zeros((6, H))
        for s in range(6):
            w = 1 if by_steps else DX[s]
            if size - w < 0:
                continue
            src = prev1 if w == 1 else prev2
            if s == 0:
                cur[0, 1:] = src[3, :-1] + src[2, :-1]
                if size - w == 0:
                    cur[0, 1] += 1.0
            elif s == 3:
                cur[3, 1:] = src[0, :-1] + src[4, :-1]
            elif s == 2:
                cur[2, :-1] = src[5, 1:] + src[1, 1:]
            elif s == 5:
                cur[5, :-1] = src[3, 1:] + src[2, 1:]
            elif s == 1:
                cur[1] = src[0] + src[4]
            else:
                cur[4] = src[5] + src[1]
        col = cur.sum(axis=0)
        total = col.sum()
        moment = float(np.dot(np.arange(H), col))
        if total > 1e200:
            scale = 1.0 / total
            cur *= scale
            prev1 = prev1 * scale
        prev2, prev1 = prev1, cur
    return moment / total
