"""Hot-loop kernels with a compiled core and a pure-Python fallback.

The Cython extension ``hexpath._ckernels`` is used when it imports; setting
``HEXPATH_PURE_PYTHON=1`` forces the fallback.  Both backends expose:

``dfs_count(max_size, by_steps, axis_only=False)``
    brute-force DFS counts ``counts[size, height]`` over the step automaton;
``inside_mask(px, py, qx, qy)``
    even-odd ray casting of integer points against an integer polygon;
``height_moment_float(n, by_steps)``
    expected final height from a rescaled floating transfer DP.
"""
from __future__ import annotations

import os
from types import ModuleType

from . import _purepy

try:
    if os.environ.get("HEXPATH_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _ckernels as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

BACKEND = "cython" if _compiled is not None else "python"
_impl: ModuleType = _compiled if _compiled is not None else _purepy

dfs_count = _impl.dfs_count
inside_mask = _impl.inside_mask
height_moment_float = _impl.height_moment_float


def available_backends() -> dict[str, ModuleType]:
    out = {"python": _purepy}
    if _compiled is not None:
        out["cython"] = _compiled
    return out
