"""Subset-scan kernels with backend selection.

The compiled Cython backend is used when its extension module imported
successfully; otherwise the pure NumPy backend is used. Set the environment
variable ``EXPANDERS_PURE=1`` before import to force the pure backend (the
benchmark suite uses this to compare the two).
"""

from __future__ import annotations

import os

import numpy as np

from . import pure
from .pure import MAX_SCAN_BITS

try:
    from . import _speedups as _compiled  # type: ignore[attr-defined]
except ImportError:
    _compiled = None

_force_pure = os.environ.get("EXPANDERS_PURE") == "1"
_impl = pure if (_compiled is None or _force_pure) else _compiled
BACKEND = "pure" if _impl is pure else "compiled"

scan_vertex_expansion = _impl.scan_vertex_expansion
scan_cheeger = _impl.scan_cheeger
scan_max_density = _impl.scan_max_density


def available_backends() -> dict[str, object]:
    """Importable backends by name (used by tests and the benchmark)."""
    out: dict[str, object] = {"pure": pure}
    if _compiled is not None:
        out["compiled"] = _compiled
    return out


def adjacency_mask_array(g) -> np.ndarray:
    """Per-vertex neighbor bitmasks as a uint32 array for the scan kernels."""
    if g.n > MAX_SCAN_BITS:
        raise ValueError(f"kernels handle n <= {MAX_SCAN_BITS}, got {g.n}")
    return np.array(g.adjacency_masks, dtype=np.uint32)


def degree_array(g) -> np.ndarray:
    return np.array(g.deg, dtype=np.uint32)
