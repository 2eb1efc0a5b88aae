"""The six arc steps, the step-succession automaton, and validated paths.

Coordinates are integral: a step adds ``dx`` to the abscissa and ``dh`` to the
height, where the true ordinate is ``h * sqrt(3)`` and circles have radius 2.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import IllegalStart, IllegalTransition, QuarterPlaneViolation, UnknownToken


class Step(enum.IntEnum):
    # Value order is the lexicographic enumeration order.
    U = 0
    F = 1
    D = 2
    Ub = 3
    Fb = 4
    Db = 5

    @property
    def dx(self) -> int:
        return 2 if self in (Step.F, Step.Fb) else 1

    @property
    def dh(self) -> int:
        return _DH[self]

    @property
    def barred(self) -> bool:
        return self >= Step.Ub

    @property
    def token(self) -> str:
        return self.name


_DH = {Step.U: 1, Step.Ub: 1, Step.F: 0, Step.Fb: 0, Step.D: -1, Step.Db: -1}

#: Marker for "no previous step" in the automaton.
START = None

_SUCCESSORS: dict[Step | None, tuple[Step, ...]] = {
    START: (Step.U,),
    Step.U: (Step.F, Step.Ub),
    Step.Ub: (Step.U, Step.Db),
    Step.D: (Step.U, Step.Db),
    Step.Db: (Step.D, Step.Fb),
    Step.F: (Step.D, Step.Fb),
    Step.Fb: (Step.F, Step.Ub),
}


def step_successors(prev: Step | None, height: int) -> frozenset[Step]:
    """Steps that may follow ``prev`` when the path currently sits at ``height``.

    ``prev=None`` stands for the start of the path.
    """
    if height < 0:
        raise ValueError("height must be nonnegative")
    return frozenset(s for s in _SUCCESSORS[prev] if height + s.dh >= 0)


def ordered_successors(prev: Step | None, height: int) -> tuple[Step, ...]:
    """Like :func:`step_successors` but in enumeration order."""
    return tuple(s for s in _SUCCESSORS[prev] if height + s.dh >= 0)


@dataclass(frozen=True)
class PathStats:
    width: int
    height: int
    nbsteps: int
    ends_on_axis: bool


@dataclass(frozen=True)
class PackingPath:
    """An immutable, validated partial packing path.

    Construction checks the start step, every transition and the
    quarter-plane constraint; statistics are computed once.
    """

    steps: tuple[Step, ...]
    width: int = field(init=False)
    height: int = field(init=False)

    def __init__(self, steps: Iterable[Step | str] = ()):
        seq = tuple(s if isinstance(s, Step) else Step[s] for s in steps)
        width, height = _validate(seq)
        object.__setattr__(self, "steps", seq)
        object.__setattr__(self, "width", width)
        object.__setattr__(self, "height", height)

    @property
    def nbsteps(self) -> int:
        return len(self.steps)

    @property
    def ends_on_axis(self) -> bool:
        return self.height == 0

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def __str__(self) -> str:
        return render_tokens(self)

    def __repr__(self) -> str:
        return f"PackingPath({render_tokens(self)!r})"


def _validate(seq: Sequence[Step]) -> tuple[int, int]:
    width = height = 0
    prev: Step | None = START
    for i, s in enumerate(seq):
        if s not in _SUCCESSORS[prev]:
            if prev is START:
                raise IllegalStart(f"a path must start with U, got {s.name}", 0)
            raise IllegalTransition(i, prev, s)
        height += s.dh
        if height < 0:
            raise QuarterPlaneViolation(f"height drops below 0 at position {i}", i)
        width += s.dx
        prev = s
    return width, height


_TOKEN_SPLIT = re.compile(r",| +")
_TOKENS = {s.name: s for s in Step}


def parse_path(text: str) -> PackingPath:
    """Parse ``U F D``-style tokens (separated by ``,`` or runs of spaces)."""
    if text == "":
        return PackingPath(())
    steps = []
    for i, tok in enumerate(_TOKEN_SPLIT.split(text)):
        try:
            steps.append(_TOKENS[tok])
        except KeyError:
            raise UnknownToken(f"unknown token {tok!r} at position {i}", i) from None
    return PackingPath(steps)


def render_tokens(path: PackingPath | Iterable[Step], sep: str = " ") -> str:
    return sep.join(s.name for s in path)


def stats(path: PackingPath) -> PathStats:
    return PathStats(path.width, path.height, path.nbsteps, path.ends_on_axis)


def vertices(path: PackingPath | Sequence[Step]) -> list[tuple[int, int]]:
    """Integer tangency points visited by the path, starting at the origin."""
    x = h = 0
    pts = [(0, 0)]
    for s in path:
        x += s.dx
        h += s.dh
        pts.append((x, h))
    return pts


def contains_factor(path: PackingPath | Sequence[Step], factor: Sequence[Step | str]) -> bool:
    seq = tuple(path)
    pat = tuple(s if isinstance(s, Step) else Step[s] for s in factor)
    k = len(pat)
    if k == 0:
        return True
    return any(seq[i:i + k] == pat for i in range(len(seq) - k + 1))


def is_inchworm(path: PackingPath) -> bool:
    """Axis path avoiding the factors Ub Db and D U."""
    return (
        path.ends_on_axis
        and not contains_factor(path, (Step.Ub, Step.Db))
        and not contains_factor(path, (Step.D, Step.U))
    )
