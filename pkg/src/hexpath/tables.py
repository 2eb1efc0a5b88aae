"""Exact count tables shared by the DP counters, the closed forms and the brute-force oracle."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


@dataclass
class StatTable:
    """Counts indexed by ``(size, secondary)``, e.g. ``(width, height)``.

    ``bound`` is the largest size covered; sizes up to it with no entry are
    genuinely zero.  Zero counts are never stored.
    """

    statistic: str
    by: str
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    bound: int = 0

    def __post_init__(self):
        self.entries = {k: int(v) for k, v in self.entries.items() if v}

    @classmethod
    def from_rows(cls, statistic: str, by: str, rows: Mapping[int, Mapping[int, int]], bound: int) -> StatTable:
        ent = {(n, k): c for n, row in rows.items() for k, c in row.items()}
        return cls(statistic, by, ent, bound)

    def get(self, n: int, k: int) -> int:
        return self.entries.get((n, k), 0)

    __call__ = get

    def row(self, n: int) -> dict[int, int]:
        return {k: c for (m, k), c in sorted(self.entries.items()) if m == n}

    def rows(self) -> dict[int, dict[int, int]]:
        out: dict[int, dict[int, int]] = {n: {} for n in range(self.bound + 1)}
        for (n, k), c in sorted(self.entries.items()):
            out.setdefault(n, {})[k] = c
        return out

    def total(self, n: int) -> int:
        return sum(self.row(n).values())

    def totals(self) -> list[int]:
        return [self.total(n) for n in range(self.bound + 1)]

    def restrict(self, bound: int) -> StatTable:
        return StatTable(self.statistic, self.by, {k: v for k, v in self.entries.items() if k[0] <= bound}, min(bound, self.bound))

    def diff(self, other: StatTable, bound: int | None = None) -> list[tuple[int, int, int, int]]:
        """Entries ``(n, k, mine, theirs)`` that differ up to ``bound``."""
        b = min(self.bound, other.bound) if bound is None else bound
        keys = {k for k in self.entries if k[0] <= b} | {k for k in other.entries if k[0] <= b}
        return [(n, k, self.get(n, k), other.get(n, k)) for n, k in sorted(keys) if self.get(n, k) != other.get(n, k)]

    def agrees(self, other: StatTable, bound: int | None = None) -> bool:
        return not self.diff(other, bound)

    def __iter__(self) -> Iterator[tuple[int, int, int]]:
        for (n, k), c in sorted(self.entries.items()):
            yield n, k, c

    # ---- serialization -------------------------------------------------------
    def to_json_obj(self) -> dict:
        return {
            "statistic": [self.statistic],
            "by": [self.by],
            "entries": [[n, k, str(c)] for n, k, c in self],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str | dict, bound: int | None = None) -> StatTable:
        obj = json.loads(text) if isinstance(text, str) else text
        ent = {(int(n), int(k)): int(c) for n, k, c in obj["entries"]}
        if bound is None:
            bound = max((n for n, _ in ent), default=0)
        return cls(obj["statistic"][0], obj["by"][0], ent, bound)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([self.statistic, self.by, "count"])
        for n, k, c in self:
            w.writerow([n, k, c])
        return buf.getvalue()

    def to_text(self, var: str = "u") -> str:
        """One line per size: ``n: c_k*u^k + ...`` (highest power first)."""
        lines = []
        for n, row in self.rows().items():
            if not row:
                continue
            terms = [(f"{c}*{var}^{k}" if k else str(c)) for k, c in sorted(row.items(), reverse=True)]
            lines.append(f"{n}: " + " + ".join(terms))
        return "\n".join(lines) + ("\n" if lines else "")

    def format(self, fmt: str, var: str = "u") -> str:
        if fmt == "json":
            return self.to_json() + "\n"
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text(var)
        raise ValueError(f"unknown format {fmt!r}")


@dataclass
class AxisPolyTable:
    """Width -> polynomial in ``y`` (``{exponent: count}``) for axis paths."""

    flavor: str
    polys: dict[int, dict[int, int]]
    bound: int

    def poly(self, width: int) -> dict[int, int]:
        return dict(self.polys.get(width, {}))

    def __getitem__(self, width: int) -> dict[int, int]:
        return self.poly(width)

    def total(self, width: int) -> int:
        return sum(self.polys.get(width, {}).values())

    def widths(self) -> list[int]:
        return list(range(0, self.bound + 1, 4))

    def to_stat_table(self) -> StatTable:
        by = "kiss" if "kiss" in self.flavor else self.flavor
        return StatTable.from_rows("width", by, self.polys, self.bound)


def poly_from_pairs(pairs: Iterable[tuple[int, int]]) -> dict[int, int]:
    """Aggregate ``(exponent, count)`` pairs into a sparse polynomial."""
    out: dict[int, int] = {}
    for e, c in pairs:
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in sorted(out.items()) if c}
