"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3] [--json]

Each kernel is run on both backends, the results are compared, and the best
wall time of ``--repeat`` runs is reported along with the speedup.
"""
from __future__ import annotations

import argparse
import json
import sys
import timeit

import numpy as np

from hexpath import kernels


def _cases():
    rng = np.random.default_rng(0)
    # a long zigzag polygon and odd-coordinate query points (never on an edge)
    m = 400
    px = np.arange(m, dtype=np.int64) * 2
    py = np.where(np.arange(m) % 2 == 0, 0, 8).astype(np.int64)
    px = np.concatenate([px, [px[-1], 0]])
    py = np.concatenate([py, [-2, -2]])
    qx = (2 * rng.integers(0, m, 20000) + 1).astype(np.int64)
    qy = (2 * rng.integers(-1, 4, 20000) + 1).astype(np.int64)
    return [
        ("dfs_count width 24", lambda mod: mod.dfs_count(24, False)),
        ("dfs_count steps 18", lambda mod: mod.dfs_count(18, True)),
        ("inside_mask 800-gon x 20000", lambda mod: mod.inside_mask(px, py, qx, qy)),
        ("height_moment_float width 1500", lambda mod: mod.height_moment_float(1500, False)),
    ]


def _same(a, b) -> bool:
    if isinstance(a, np.ndarray):
        return a.shape == b.shape and bool(np.all(a == b))
    return abs(a - b) <= 1e-9 * max(1.0, abs(a))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend is not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 1
    rows = []
    for name, fn in _cases():
        times = {}
        results = {}
        for b, mod in backends.items():
            results[b] = fn(mod)
            times[b] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat))
        rows.append({
            "kernel": name,
            "python_s": times["python"],
            "cython_s": times["cython"],
            "speedup": times["python"] / times["cython"] if times["cython"] else float("inf"),
            "agree": _same(results["python"], results["cython"]),
        })

    if args.json:
        print(json.dumps(rows, indent=1))
    else:
        print(f"{'kernel':34} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}  agree")
        for r in rows:
            print(f"{r['kernel']:34} {r['python_s']:11.4f} {r['cython_s']:11.4f} {r['speedup']:8.1f}  {r['agree']}")
    return 0 if all(r["agree"] for r in rows) else 1


if __name__ == "__main__":
    sys.exit(main())
