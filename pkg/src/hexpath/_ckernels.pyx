# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops. Signatures mirror ``hexpath._purepy`` exactly."""
import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, free

cnp.import_array()

# Step codes: U=0 F=1 D=2 Ub=3 Fb=4 Db=5, start=6.
cdef int DX[6]
cdef int DH[6]
cdef int SUCC[7][2]
DX[:] = [1, 2, 1, 1, 2, 1]
DH[:] = [1, 0, -1, 1, 0, -1]
SUCC[0][:] = [1, 3]
SUCC[1][:] = [2, 4]
SUCC[2][:] = [0, 5]
SUCC[3][:] = [0, 5]
SUCC[4][:] = [1, 3]
SUCC[5][:] = [2, 4]
SUCC[6][:] = [0, -1]


def dfs_count(int max_size, bint by_steps, bint axis_only=False):
    """Count partial paths by (size, height) with an explicit-stack DFS.

    Returns an int64 array ``counts[size, height]`` of shape
    ``(max_size + 1, max_size + 1)``.
    """
    cdef cnp.ndarray[cnp.int64_t, ndim=2] counts = np.zeros((max_size + 1, max_size + 1), dtype=np.int64)
    cdef int depth_cap = max_size + 2
    cdef int* st_last = <int*> malloc(depth_cap * sizeof(int))
    cdef int* st_size = <int*> malloc(depth_cap * sizeof(int))
    cdef int* st_h = <int*> malloc(depth_cap * sizeof(int))
    cdef int* st_next = <int*> malloc(depth_cap * sizeof(int))
    cdef int top, last, size, h, j, s, ns, nh
    if st_last == NULL or st_size == NULL or st_h == NULL or st_next == NULL:
        raise MemoryError()
    try:
        top = 0
        st_last[0] = 6
        st_size[0] = 0
        st_h[0] = 0
        st_next[0] = 0
        counts[0, 0] = 1
        while top >= 0:
            last = st_last[top]
            j = st_next[top]
            if j >= 2:
                top -= 1
                continue
            st_next[top] = j + 1
            s = SUCC[last][j]
            if s < 0:
                continue
            h = st_h[top]
            nh = h + DH[s]
            if nh < 0:
                continue
            size = st_size[top]
            ns = size + (1 if by_steps else DX[s])
            if ns > max_size:
                continue
            if axis_only and nh > max_size - ns:
                continue
            if not axis_only or nh == 0:
                counts[ns, nh] += 1
            top += 1
            st_last[top] = s
            st_size[top] = ns
            st_h[top] = nh
            st_next[top] = 0
    finally:
        free(st_last)
        free(st_size)
        free(st_h)
        free(st_next)
    return counts


def inside_mask(cnp.int64_t[:] px, cnp.int64_t[:] py, cnp.int64_t[:] qx, cnp.int64_t[:] qy):
    """Even-odd ray casting of integer points against a closed integer polygon.

    The polygon is given by its vertex list (first vertex not repeated).
    Edges use the half-open rule ``[ymin, ymax)``.  Returns a uint8 mask, or
    raises ``ValueError`` if any query point lies on an edge.
    """
    cdef Py_ssize_t n = px.shape[0], m = qx.shape[0], i, a, b
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.zeros(m, dtype=np.uint8)
    cdef cnp.int64_t x, y, x1, y1, x2, y2, cross, dy
    cdef int parity
    for i in range(m):
        x = qx[i]
        y = qy[i]
        parity = 0
        for a in range(n):
            b = a + 1
            if b == n:
                b = 0
            x1 = px[a]; y1 = py[a]; x2 = px[b]; y2 = py[b]
            cross = (x2 - x1) * (y - y1) - (x - x1) * (y2 - y1)
            if cross == 0 and min(x1, x2) <= x <= max(x1, x2) and min(y1, y2) <= y <= max(y1, y2):
                raise ValueError(f"point ({x}, {y}) lies on the polygon boundary")
            if (y1 <= y < y2) or (y2 <= y < y1):
                # crossing abscissa > x  <=>  cross has the sign of dy
                dy = y2 - y1
                if (dy > 0 and cross > 0) or (dy < 0 and cross < 0):
                    parity ^= 1
        out[i] = parity
    return out


def height_moment_float(int n, bint by_steps):
    """Expected final height over all partial paths of size ``n``.

    Floating transfer DP; each new layer is rescaled together with the layers
    it still depends on so nothing overflows.
    """
    cdef int H = n + 2, size, k, s, w, lag
    cdef int nl = 3
    # layers[lag][s][k]: lag 0 = size-1, 1 = size-2 ... stored in a ring
    cdef cnp.ndarray[cnp.float64_t, ndim=3] ring = np.zeros((nl, 6, H), dtype=np.float64)
    cdef double total, moment, scale, v
    cdef int cur, prev1, prev2, src
    # size 0 is the empty path; treat it as a virtual state "start" handled below
    if n == 0:
        return 0.0
    for size in range(1, n + 1):
        cur = size % nl
        prev1 = (size - 1) % nl
        prev2 = (size - 2) % nl
        ring[cur, :, :] = 0.0
        for s in range(6):
            w = 1 if by_steps else DX[s]
            if size - w < 0:
                continue
            src = prev1 if w == 1 else prev2
            for k in range(H):
                v = 0.0
                if s == 0:  # U at odd height: after Ub or D (or start for k == 1)
                    if k >= 1:
                        v = ring[src, 3, k - 1] + ring[src, 2, k - 1]
                        if k == 1 and size - w == 0:
                            v += 1.0
                elif s == 3:  # Ub: after U or Fb
                    if k >= 1:
                        v = ring[src, 0, k - 1] + ring[src, 4, k - 1]
                elif s == 2:  # D: after Db or F
                    if k + 1 < H:
                        v = ring[src, 5, k + 1] + ring[src, 1, k + 1]
                elif s == 5:  # Db: after Ub or D
                    if k + 1 < H:
                        v = ring[src, 3, k + 1] + ring[src, 2, k + 1]
                elif s == 1:  # F: after U or Fb
                    v = ring[src, 0, k] + ring[src, 4, k]
                else:  # Fb: after Db or F
                    v = ring[src, 5, k] + ring[src, 1, k]
                ring[cur, s, k] = v
        total = 0.0
        moment = 0.0
        for s in range(6):
            for k in range(H):
                total += ring[cur, s, k]
                moment += k * ring[cur, s, k]
        if total > 1e200:
            scale = 1.0 / total
            for lag in range(nl):
                for s in range(6):
                    for k in range(H):
                        ring[lag, s, k] *= scale
    return moment / total
