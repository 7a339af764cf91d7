"""Hot loops behind the range scan and the congruence oracles.

Two interchangeable implementations exist: numba-compiled loops and a
vectorized numpy fallback.  ``WCN_BACKEND=numpy`` forces the fallback;
otherwise numba is used when it imports.
"""

import importlib
import os

from ._common import ALL_FLAGS, GIUGA, KORSELT, MAX_OMEGA, MULMOD_LIMIT, SQUAREFREE, WEAK_GIUGA

BACKENDS = ("numba", "numpy")


def load(name: str):
    if name not in BACKENDS:
        raise ValueError(f"unknown kernel backend {name!r}; choose from {BACKENDS}")
    return importlib.import_module(f"{__name__}._{name}")


def available() -> list[str]:
    out = []
    for name in BACKENDS:
        try:
            load(name)
        except ImportError:
            continue
        out.append(name)
    return out


def _select():
    wanted = os.environ.get("WCN_BACKEND", "").strip().lower()
    if wanted:
        return wanted, load(wanted)
    try:
        return "numba", load("numba")
    except ImportError:
        return "numpy", load("numpy")


BACKEND, _impl = _select()
segment_stats = _impl.segment_stats
powsum_mod = _impl.powsum_mod
factor_batch = _impl.factor_batch

__all__ = [
    "ALL_FLAGS", "BACKEND", "BACKENDS", "GIUGA", "KORSELT", "MAX_OMEGA", "MULMOD_LIMIT",
    "SQUAREFREE", "WEAK_GIUGA", "available", "factor_batch", "load", "powsum_mod",
    "segment_stats",
]
