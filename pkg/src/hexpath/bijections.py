"""Constructive bijections from axis packing paths to classical lattice paths.

* :func:`to_skew_dyck` -- width ``4n`` paths to skew Dyck paths with ``n`` up
  steps and two-coloured down steps (tokens ``u d d2 l``);
* :func:`to_qmotzkin` -- paths with ``n`` steps to Motzkin-like paths of length
  ``n`` in which every ``d`` is followed by ``f`` and every ``f`` follows ``d``
  or ``f`` (tokens ``u d f``);
* :func:`inchworm_to_dyck` / :func:`inchworm_to_peakless` -- inchworm paths,
  through their chain of kissed circles, to Dyck paths (semilength ``n``,
  ``2n - kiss`` peaks) and peakless Motzkin paths of length ``kiss``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import ClassVar, Iterator, Sequence

from .errors import DecompositionFailure, InvalidImagePath, NotAxisPath, NotInchworm
from .geometry import CircleCenter, circles_below, touched_circles
from .steps import PackingPath, Step, is_inchworm, vertices

U, F, D, Ub, Fb, Db = Step.U, Step.F, Step.D, Step.Ub, Step.Fb, Step.Db


# ---- image path types ------------------------------------------------------------

def _heights(steps: Sequence[str], up: set[str], down: set[str]) -> list[int]:
    h = 0
    out = [0]
    for s in steps:
        h += 1 if s in up else -1 if s in down else 0
        out.append(h)
    return out


@dataclass(frozen=True)
class _TokenPath:
    steps: tuple[str, ...]
    TOKENS: ClassVar[tuple[str, ...]] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        bad = [t for t in self.steps if t not in self.TOKENS]
        if bad:
            raise InvalidImagePath(f"unknown token {bad[0]!r}")
        why = self._violation()
        if why:
            raise InvalidImagePath(f"{type(self).__name__}: {why}")

    def _violation(self) -> str | None:
        return None

    @classmethod
    def parse(cls, text: str):
        return cls(tuple(text.split()))

    @classmethod
    def is_valid(cls, steps: Sequence[str]) -> bool:
        try:
            cls(tuple(steps))
        except InvalidImagePath:
            return False
        return True

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return " ".join(self.steps)


@dataclass(frozen=True)
class ColoredSkewDyckPath(_TokenPath):
    """Steps ``u`` (+1), ``d``/``d2``/``l`` (-1); no ``l u`` and no ``u l`` factor."""

    TOKENS: ClassVar[tuple[str, ...]] = ("u", "d", "d2", "l")

    def _violation(self):
        hs = _heights(self.steps, {"u"}, {"d", "d2", "l"})
        if min(hs) < 0:
            return "goes below the axis"
        if hs[-1] != 0:
            return "does not end on the axis"
        for a, b in zip(self.steps, self.steps[1:]):
            if (a, b) in (("l", "u"), ("u", "l")):
                return f"contains the factor {a} {b}"
        return None

    @property
    def semilength(self) -> int:
        return self.steps.count("u")


@dataclass(frozen=True)
class QMotzkinPath(_TokenPath):
    """Motzkin path where each ``d`` is followed by ``f`` and each ``f`` follows ``d`` or ``f``."""

    TOKENS: ClassVar[tuple[str, ...]] = ("u", "d", "f")

    def _violation(self):
        hs = _heights(self.steps, {"u"}, {"d"})
        if min(hs) < 0:
            return "goes below the axis"
        if hs[-1] != 0:
            return "does not end on the axis"
        for i, s in enumerate(self.steps):
            if s == "d" and (i + 1 >= len(self.steps) or self.steps[i + 1] != "f"):
                return f"d at position {i} is not followed by f"
            if s == "f" and (i == 0 or self.steps[i - 1] not in ("d", "f")):
                return f"f at position {i} does not follow d or f"
        return None


@dataclass(frozen=True)
class DyckPath(_TokenPath):
    TOKENS: ClassVar[tuple[str, ...]] = ("U", "D")

    def _violation(self):
        hs = _heights(self.steps, {"U"}, {"D"})
        if min(hs) < 0:
            return "goes below the axis"
        if hs[-1] != 0:
            return "does not end on the axis"
        return None

    @property
    def peaks(self) -> int:
        return sum(1 for a, b in zip(self.steps, self.steps[1:]) if a == "U" and b == "D")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2


@dataclass(frozen=True)
class PeaklessMotzkinPath(_TokenPath):
    TOKENS: ClassVar[tuple[str, ...]] = ("U", "F", "D")

    def _violation(self):
        hs = _heights(self.steps, {"U"}, {"D"})
        if min(hs) < 0:
            return "goes below the axis"
        if hs[-1] != 0:
            return "does not end on the axis"
        if any(a == "U" and b == "D" for a, b in zip(self.steps, self.steps[1:])):
            return "contains a peak U D"
        return None


_CHAIN_OFFSETS = {(4, 0), (2, 2), (2, -2)}


@dataclass(frozen=True)
class CircleSequence:
    """A rightward chain of tangent lattice circles from ``(2, 0)`` back to the axis."""

    circles: tuple[CircleCenter, ...]

    def __post_init__(self):
        cs = tuple(CircleCenter(*c) for c in self.circles)
        object.__setattr__(self, "circles", cs)
        if not cs:
            return
        if cs[0] != (2, 0):
            raise InvalidImagePath("first circle must be centered at (2, 0)")
        if cs[-1].h != 0:
            raise InvalidImagePath("last circle must sit on the axis row")
        for c in cs:
            if not CircleCenter.valid(*c):
                raise InvalidImagePath(f"{tuple(c)} is not a lattice center")
        for a, b in zip(cs, cs[1:]):
            if (b.x - a.x, b.h - a.h) not in _CHAIN_OFFSETS:
                raise InvalidImagePath(f"{tuple(b)} is not a right neighbour of {tuple(a)}")

    def __len__(self) -> int:
        return len(self.circles)

    def __iter__(self):
        return iter(self.circles)

    @property
    def width(self) -> int:
        return self.circles[-1].x + 2 if self.circles else 0


# ---- f: skew Dyck ---------------------------------------------------------------------

def _require_axis(path: PackingPath) -> None:
    if not path.ends_on_axis:
        raise NotAxisPath(f"path ends at height {path.height}, not on the axis")


def _return_index(seq: Sequence[Step], start: int, base: int) -> int:
    """Index of the first step after ``start`` that brings the height to ``base``."""
    h = base + 1
    for i in range(start, len(seq)):
        h += seq[i].dh
        if h == base:
            return i
    raise DecompositionFailure("no return to the baseline")


def _f(seq: tuple[Step, ...]) -> list[str]:
    if not seq:
        return []
    if seq[0] != U or len(seq) < 3:
        raise DecompositionFailure(f"unexpected shape {seq}")
    if seq[1] == F:
        if seq[2] == D:                                   # U F D R
            return ["u", "d"] + _f(seq[3:])
        if seq[2] == Fb:                                  # U F Fb Q with U Q an axis path
            return ["u"] + _f((U,) + seq[3:]) + ["l"]
    if seq[1] == Ub:
        j = _return_index(seq, 2, 1)                      # the Db closing the lifted part
        if seq[j] != Db or j + 1 >= len(seq):
            raise DecompositionFailure(f"unexpected shape {seq}")
        q = seq[2:j]
        nxt, rest = seq[j + 1], seq[j + 2:]
        if nxt == D:
            if not q:                                     # U Ub Db D R
                return ["u", "d2"] + _f(rest)
            return ["u"] + _f(q) + ["d"] + _f(rest)       # U Ub Q Db D R
        if nxt == Fb:                                     # U Ub Q Db Fb R with U R an axis path
            return ["u"] + _f((U,) + rest) + ["d2"] + _f(q)
    raise DecompositionFailure(f"unexpected shape {seq}")


def to_skew_dyck(path: PackingPath) -> ColoredSkewDyckPath:
    _require_axis(path)
    return ColoredSkewDyckPath(tuple(_f(path.steps)))


# ---- g: QMotzkin ------------------------------------------------------------------------

def _g(seq: tuple[Step, ...]) -> list[str]:
    if not seq:
        return []
    if seq[0] != U:
        raise DecompositionFailure(f"unexpected shape {seq}")
    i, k = 1, 0
    while i + 1 < len(seq) and seq[i] == F and seq[i + 1] == Fb:
        i += 2
        k += 1
    tail = ["f"] * (2 * k)
    if i < len(seq) and seq[i] == Ub:
        j = _return_index(seq, i + 1, 1)
        if seq[j] != Db or j + 1 >= len(seq):
            raise DecompositionFailure(f"unexpected shape {seq}")
        q = seq[i + 1:j]
        nxt, rest = seq[j + 1], seq[j + 2:]
        if nxt == D:                                      # U (F Fb)^k Ub Q Db D R
            return ["u"] + _g(q) + ["d", "f", "f"] + tail + _g(rest)
        if nxt == Fb:                                     # U (F Fb)^k Ub Q Db Fb S
            return ["u"] + _g(q) + ["d", "f"] + tail + _g((U,) + rest)
    if i + 1 < len(seq) and seq[i] == F and seq[i + 1] == D:
        rest = seq[i + 2:]                                # U (F Fb)^k F D R
        return ["u"] + _g(rest) + ["d", "f"] + tail
    raise DecompositionFailure(f"unexpected shape {seq}")


def to_qmotzkin(path: PackingPath) -> QMotzkinPath:
    _require_axis(path)
    return QMotzkinPath(tuple(_g(path.steps)))


# ---- inchworm maps ----------------------------------------------------------------------

def path_to_circle_sequence(path: PackingPath) -> CircleSequence:
    """Kissed circles in order of the first path vertex lying on each."""
    if not is_inchworm(path):
        raise NotInchworm("path is not an inchworm path")
    kissed = touched_circles(path) & circles_below(path)
    first: dict[CircleCenter, int] = {}
    for i, (vx, vh) in enumerate(vertices(path)):
        for c in kissed:
            if c not in first and (vx - c.x, vh - c.h) in ((2, 0), (-2, 0), (1, 1), (1, -1), (-1, 1), (-1, -1)):
                first[c] = i
    order = sorted(kissed, key=lambda c: (first[c], c.x))
    return CircleSequence(tuple(order))


def _shift(cs: Sequence[CircleCenter], dx: int, dh: int) -> tuple[CircleCenter, ...]:
    return tuple(CircleCenter(c.x + dx, c.h + dh) for c in cs)


def _split(c: tuple[CircleCenter, ...]):
    """Return ``("a", C')`` or ``("b", C', C'')`` with both parts moved back to start at (2, 0)."""
    if len(c) == 1 or c[1] == (6, 0):
        return ("a", _shift(c[1:], -4, 0))
    if c[1] != (4, 2):
        raise DecompositionFailure(f"unexpected second circle {tuple(c[1])}")
    j = next((i for i in range(2, len(c)) if c[i].h == 0), None)
    if j is None:
        raise DecompositionFailure("elevated part never returns to the axis")
    inner = _shift(c[1:j], -2, -2)
    rest = c[j + 1:]
    xj = c[j].x
    if rest and rest[0] != (xj + 4, 0):
        raise DecompositionFailure("part after the return does not continue on the axis")
    return ("b", inner, _shift(rest, -(xj + 2), 0))


def _dyck(c: tuple[CircleCenter, ...]) -> list[str]:
    if not c:
        return []
    parts = _split(c)
    if parts[0] == "a":
        return ["U", "D"] + _dyck(parts[1])
    return ["U"] + _dyck(parts[1]) + ["D"] + _dyck(parts[2])


def _peakless(c: tuple[CircleCenter, ...]) -> list[str]:
    if not c:
        return []
    parts = _split(c)
    if parts[0] == "a":
        return ["F"] + _peakless(parts[1])
    return ["U"] + _peakless(parts[1]) + ["D"] + _peakless(parts[2])


def _as_sequence(c) -> tuple[CircleCenter, ...]:
    if isinstance(c, PackingPath):
        c = path_to_circle_sequence(c)
    if isinstance(c, CircleSequence):
        return c.circles
    return CircleSequence(tuple(c)).circles


def inchworm_to_dyck(c: CircleSequence | PackingPath) -> DyckPath:
    return DyckPath(tuple(_dyck(_as_sequence(c))))


def inchworm_to_peakless(c: CircleSequence | PackingPath) -> PeaklessMotzkinPath:
    return PeaklessMotzkinPath(tuple(_peakless(_as_sequence(c))))


# ---- codomain enumerators (independent DFS) --------------------------------------------

def _walks(n: int, moves: dict[str, int], ok) -> Iterator[tuple[str, ...]]:
    """Length-``n`` words ending at height 0, pruned by ``ok(prefix_last, token)``."""
    out: list[str] = []

    def rec(h: int):
        left = n - len(out)
        if left == 0:
            if h == 0:
                yield tuple(out)
            return
        if h > left:
            return
        for t, dh in moves.items():
            nh = h + dh
            if nh < 0 or not ok(out[-1] if out else None, t):
                continue
            out.append(t)
            yield from rec(nh)
            out.pop()

    yield from rec(0)


def enumerate_skew_dyck(n: int) -> Iterator[ColoredSkewDyckPath]:
    """Two-coloured skew Dyck paths with ``n`` up steps (length ``2n``)."""
    moves = {"u": 1, "d": -1, "d2": -1, "l": -1}
    bad = {("l", "u"), ("u", "l")}
    for w in _walks(2 * n, moves, lambda a, b: (a, b) not in bad):
        yield ColoredSkewDyckPath(w)


def enumerate_qmotzkin(n: int) -> Iterator[QMotzkinPath]:
    def ok(a, b):
        if a == "d" and b != "f":
            return False
        if b == "f" and a not in ("d", "f"):
            return False
        return True

    for w in _walks(n, {"u": 1, "d": -1, "f": 0}, ok):
        if not w or w[-1] != "d":
            yield QMotzkinPath(w)


def enumerate_dyck(n: int) -> Iterator[DyckPath]:
    for w in _walks(2 * n, {"U": 1, "D": -1}, lambda a, b: True):
        yield DyckPath(w)


def enumerate_peakless(n: int) -> Iterator[PeaklessMotzkinPath]:
    for w in _walks(n, {"U": 1, "F": 0, "D": -1}, lambda a, b: not (a == "U" and b == "D")):
        yield PeaklessMotzkinPath(w)


MAPS = {
    "skew-dyck": to_skew_dyck,
    "qmotzkin": to_qmotzkin,
    "circles": path_to_circle_sequence,
    "dyck": inchworm_to_dyck,
    "peakless": inchworm_to_peakless,
}
