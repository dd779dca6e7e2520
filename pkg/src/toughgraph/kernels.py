"""Backend dispatch for the bitset kernels.

At import time this module selects the compiled Cython kernels when the
extension is present, otherwise the pure-Python twin.  Setting the
environment variable TOUGHGRAPH_PURE=1 forces the pure backend.  Callers
turn an adjacency row tuple into an opaque handle once via prepare() and
pass that handle to every kernel call; graphs wider than 64 vertices are
routed to the pure backend regardless of what was compiled.
"""

from __future__ import annotations

import os

from . import _pykernels

try:
    from . import _ckernels
except ImportError:
    _ckernels = None

if os.environ.get("TOUGHGRAPH_PURE"):
    _ckernels = None

BACKEND = "compiled" if _ckernels is not None else "python"

_C = 0  # handle tags
_PY = 1


def prepare(adj):
    """Build an adjacency handle for the kernels from integer bitmask rows."""
    n = len(adj)
    if _ckernels is not None and 0 < n <= 64:
        import numpy as np

        return (_C, np.array(adj, dtype=np.uint64))
    return (_PY, tuple(adj))


def _module(handle):
    return _ckernels if handle[0] == _C else _pykernels


def reach_mask(handle, alive, start):
    return _module(handle).reach_mask(handle[1], alive, start)


def count_components(handle, alive):
    return _module(handle).count_components(handle[1], alive)


def seeds_separated(handle, alive, seed_mask):
    return _module(handle).seeds_separated(handle[1], alive, seed_mask)


def best_ratio_scan(handle, n):
    return _module(handle).best_ratio_scan(handle[1], n)


def collect_ratio_scan(handle, n, num, den):
    return _module(handle).collect_ratio_scan(handle[1], n, num, den)
