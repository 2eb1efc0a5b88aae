"""Riordan arrays built from path counts and from closed-form pairs.

Four arrays are available.  With ``s_w`` the width/height counts and
``s_st`` the steps/height counts:

* ``Se2[n][k] = s_w(4n - 2k, 2k)``     * ``So2[n][k] = s_w(2n + 1, 2k + 1)``
* ``Se3[n][k] = s_st(n + k, 2k)``      * ``So3[n][k] = s_st(n + k + 1, 2k + 1)``
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .counters import steps_height_table, width_height_table
from .errors import BoundExceeded, InvalidPair, NotRiordan, UnknownName
from .series import IntSeries

ARRAYS = ("Se2", "So2", "Se3", "So3")
DEFAULT_MAX_SIZE = 16


@dataclass(frozen=True)
class RiordanMatrix:
    """Lower-triangular ``m x m`` integer matrix, optionally with its ``(g, f)`` pair."""

    rows: tuple[tuple[int, ...], ...]
    g: IntSeries | None = None
    f: IntSeries | None = None
    provenance: str = ""

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, n: int, k: int) -> int:
        return self.rows[n][k]

    def row(self, n: int) -> list[int]:
        """Row ``n`` up to the diagonal."""
        return list(self.rows[n][: n + 1])

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RiordanMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __matmul__(self, other: RiordanMatrix) -> RiordanMatrix:
        return matrix_product(self, other)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for r in self.rows:
            w.writerow(r)
        return buf.getvalue()

    def to_json_obj(self) -> dict:
        obj: dict = {"size": self.size, "provenance": self.provenance, "rows": [[str(v) for v in r] for r in self.rows]}
        if self.g is not None and self.f is not None:
            obj["pair"] = {"g": self.g.to_json(), "f": self.f.to_json()}
        return obj

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _square(rows: Sequence[Sequence[int]], m: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for n in range(m):
        r = list(rows[n][: n + 1]) + [0] * (m - n - 1)
        out.append(tuple(int(v) for v in r))
    return tuple(out)


def identity(m: int) -> RiordanMatrix:
    return RiordanMatrix(tuple(tuple(int(i == j) for j in range(m)) for i in range(m)),
                         IntSeries.one(m), IntSeries.x(m), "identity")


# ---- construction -------------------------------------------------------------

def build_from_counts(which: str, m: int, bound: int = DEFAULT_MAX_SIZE) -> RiordanMatrix:
    """Slice the counting tables by the index scheme of ``which``."""
    if which not in ARRAYS:
        raise UnknownName(which)
    if m < 1:
        raise ValueError("size must be positive")
    if m > bound:
        raise BoundExceeded(f"size {m} exceeds {bound}")
    if which == "Se2":
        t = width_height_table(4 * (m - 1))
        rows = [[t.get(4 * n - 2 * k, 2 * k) for k in range(n + 1)] for n in range(m)]
    elif which == "So2":
        t = width_height_table(2 * m - 1)
        rows = [[t.get(2 * n + 1, 2 * k + 1) for k in range(n + 1)] for n in range(m)]
    elif which == "Se3":
        t = steps_height_table(2 * (m - 1))
        rows = [[t.get(n + k, 2 * k) for k in range(n + 1)] for n in range(m)]
    else:
        t = steps_height_table(2 * m - 1)
        rows = [[t.get(n + k + 1, 2 * k + 1) for k in range(n + 1)] for n in range(m)]
    return RiordanMatrix(_square(rows, m), provenance=f"counts:{which}")


def _check_pair(g: IntSeries, f: IntSeries) -> None:
    if g.val != 0 or g.is_zero():
        raise InvalidPair("g(0) must be nonzero")
    if f.val != 1:
        raise InvalidPair("need f(0) = 0 and f'(0) != 0")


def build_from_pair(g: IntSeries, f: IntSeries, m: int, provenance: str = "pair") -> RiordanMatrix:
    """Entry ``(n, k) = [x^n] g f^k``."""
    _check_pair(g, f)
    if g.order < m or f.order < m:
        raise InvalidPair(f"pair known only to order {min(g.order, f.order)}, need {m}")
    g, f = g.truncate(m), f.truncate(m)
    cols = []
    col = g
    for _ in range(m):
        cols.append(col)
        col = (col * f).truncate(m) if col.order > m else col * f
    rows = [[cols[k][n] if k <= n else 0 for k in range(m)] for n in range(m)]
    for r in rows:
        for v in r:
            if not isinstance(v, int):
                raise InvalidPair("pair produces non-integral entries")
    return RiordanMatrix(_square(rows, m), g, f, provenance)


def _x(order: int) -> IntSeries:
    return IntSeries.x(order)


def closed_pair(which: str, order: int) -> tuple[IntSeries, IntSeries]:
    """The closed-form ``(g, f)`` of each array, expanded to ``order``."""
    P = order + 6
    x = _x(P)
    if which == "Se2":
        rad = IntSeries.poly([1, -10, 9], P).sqrt()
        g = (1 - x - rad).shift(-1) / 4
        f = (1 - 3 * x - rad) / 2
    elif which == "So2":
        rad = IntSeries.poly([1, 0, -10, 0, 9], P).sqrt()
        g = (1 + 2 * x - 5 * x**2 - 6 * x**3 - (1 + 2 * x) * rad).shift(-3) / 4
        f = (1 - 3 * x**2 - rad).shift(-1) / 2
    elif which in ("Se3", "So3"):
        rad = IntSeries.poly([1, -2, 1, -4, 4], P).sqrt()
        if which == "Se3":
            g = (1 - x - rad).shift(-3) / 2
            f = (1 - x**2 * (1 + 2 * x) - (1 + x) * rad).shift(-3) / 2
        else:
            g = (1 - 3 * x**3 - 2 * x**4 - (1 + x + x**2) * rad).shift(-5) / 2
            f = (1 - x**2 - 2 * x**3 - (1 + x) * rad).shift(-3) / 2
    else:
        raise UnknownName(which)
    return g.truncate(order), f.truncate(order)


def build_from_closed_pair(which: str, m: int) -> RiordanMatrix:
    g, f = closed_pair(which, m)
    return build_from_pair(g, f, m, f"pair:{which}")


def pascal(m: int) -> RiordanMatrix:
    x = _x(m)
    return build_from_pair(1 / (1 - x), x / (1 - x), m, "pascal")


# ---- group operations ------------------------------------------------------------

def _pair_of(a: RiordanMatrix) -> tuple[IntSeries, IntSeries]:
    if a.g is None or a.f is None:
        raise InvalidPair("matrix carries no (g, f) pair")
    return a.g, a.f


def pair_multiply(p: tuple[IntSeries, IntSeries], q: tuple[IntSeries, IntSeries]) -> tuple[IntSeries, IntSeries]:
    """``(g, f) * (h, l) = (g h(f), l(f))``."""
    g, f = p
    h, l = q
    _check_pair(g, f)
    _check_pair(h, l)
    return g * h.compose(f), l.compose(f)


def pair_inverse(p: tuple[IntSeries, IntSeries]) -> tuple[IntSeries, IntSeries]:
    """``(g, f)^-1 = (1 / g(fbar), fbar)`` with ``fbar`` the compositional inverse."""
    g, f = p
    _check_pair(g, f)
    fbar = f.reversion()
    return 1 / g.compose(fbar), fbar


def matrix_product(a: RiordanMatrix, b: RiordanMatrix) -> RiordanMatrix:
    m = min(a.size, b.size)
    rows = [[sum(a.rows[n][j] * b.rows[j][k] for j in range(k, n + 1)) for k in range(m)] for n in range(m)]
    return RiordanMatrix(_square(rows, m), provenance="product")


def multiply(a: RiordanMatrix, b: RiordanMatrix) -> RiordanMatrix:
    """Riordan product; uses the pairs when both are known, else the matrix product."""
    m = min(a.size, b.size)
    if a.g is not None and b.g is not None:
        g, f = pair_multiply(_pair_of(a), _pair_of(b))
        return build_from_pair(g, f, m, "product")
    return matrix_product(a, b)


def inverse(a: RiordanMatrix) -> RiordanMatrix:
    if a.g is not None:
        d, h = pair_inverse(_pair_of(a))
        return build_from_pair(d, h, a.size, "inverse")
    return matrix_inverse(a)


def matrix_inverse(a: RiordanMatrix) -> RiordanMatrix:
    """Exact inverse of a unitriangular-up-to-diagonal integer matrix by forward substitution."""
    m = a.size
    inv = [[Fraction(0)] * m for _ in range(m)]
    for n in range(m):
        if a.rows[n][n] == 0:
            raise InvalidPair("zero on the diagonal")
        inv[n][n] = Fraction(1, a.rows[n][n])
        for k in range(n - 1, -1, -1):
            acc = sum(a.rows[n][j] * inv[j][k] for j in range(k, n))
            inv[n][k] = -acc / a.rows[n][n]
    rows = []
    for r in inv:
        if any(v.denominator != 1 for v in r):
            raise InvalidPair("inverse is not integral")
        rows.append([v.numerator for v in r])
    return RiordanMatrix(_square(rows, m), provenance="inverse")


# ---- A- and Z-sequences ----------------------------------------------------------

def _as_int(v: Fraction):
    return v.numerator if v.denominator == 1 else v


def a_sequence(a: RiordanMatrix, m: int | None = None) -> list:
    """Solve ``d[n+1][k+1] = sum_j a_j d[n][k+j]`` row by row and verify every equation."""
    d = a.rows
    size = a.size
    m = size - 1 if m is None else min(m, size - 1)
    A: list[Fraction] = []
    for j in range(m):
        # first row containing a_j: k = 0 of row n = j
        if d[j][j] == 0:
            raise NotRiordan("zero diagonal entry")
        acc = Fraction(d[j + 1][1]) - sum(A[i] * d[j][i] for i in range(j)) if j + 1 < size else None
        A.append(acc / d[j][j])
    for n in range(size - 1):
        for k in range(n + 1):
            rhs = sum(A[i] * d[n][k + i] for i in range(min(len(A), n - k + 1)))
            if n - k < len(A) and rhs != d[n + 1][k + 1]:
                raise NotRiordan(f"A-sequence fails at row {n + 1}, column {k + 1}")
    return [_as_int(v) for v in A]


def z_sequence(a: RiordanMatrix, m: int | None = None) -> list:
    """Solve ``d[n+1][0] = sum_j z_j d[n][j]`` row by row."""
    d = a.rows
    size = a.size
    m = size - 1 if m is None else min(m, size - 1)
    Z: list[Fraction] = []
    for n in range(m):
        if d[n][n] == 0:
            raise NotRiordan("zero diagonal entry")
        acc = Fraction(d[n + 1][0]) - sum(Z[j] * d[n][j] for j in range(n))
        Z.append(acc / d[n][n])
    return [_as_int(v) for v in Z]


def az_from_inverse(a: RiordanMatrix, m: int | None = None) -> tuple[list, list]:
    """``A = x/h`` and ``Z = (1 - d00 d)/h`` from the inverse pair ``(d, h)``."""
    d, h = pair_inverse(_pair_of(a))
    m = a.size - 1 if m is None else m
    x = _x(h.order)
    A = x / h
    Z = (1 - a.rows[0][0] * d) / h
    return [A[i] for i in range(m)], [Z[i] for i in range(m)]


def check_az(a: RiordanMatrix, A: Sequence, Z: Sequence) -> bool:
    """Whether the sequences regenerate every row below the first."""
    d = a.rows
    for n in range(a.size - 1):
        if len(Z) > n and sum(Z[j] * d[n][j] for j in range(n + 1)) != d[n + 1][0]:
            return False
        for k in range(n + 1):
            need = n - k + 1
            if len(A) >= need and sum(A[i] * d[n][k + i] for i in range(need)) != d[n + 1][k + 1]:
                return False
    return True
