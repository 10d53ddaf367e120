"""Kernel backend selection.

The compiled extension handles graphs fitting 64-bit masks with counts that
fit int64; everything else (and builds without the extension) falls back to
the pure-Python twin.  HOMVEC_KERNEL={c,pure} forces a backend.
"""

import os

from . import pure
from .pure import MODE_HOM, MODE_INJ, MODE_ISO, MODE_SUR, iter_maps

_forced = os.environ.get("HOMVEC_KERNEL")

if _forced == "pure":
    compiled = None
elif _forced == "c":
    from . import _ckernel as compiled  # noqa: F401  (raises if not built)
else:
    try:
        from . import _ckernel as compiled
    except ImportError:
        compiled = None

BACKEND = "c" if compiled is not None else "pure"

_INT64_CAP = 1 << 62


def fits_compiled(n_g: int, n_h: int, mode: int, m_h: int) -> bool:
    """True when the compiled kernel is available and its 64-bit mask and
    int64 count domains cover the instance (n_h**n_g bounds every mode)."""
    if compiled is None:
        return False
    if n_g > 64 or n_h > 64:
        return False
    if mode == MODE_SUR and m_h > 64:
        return False
    return n_h**max(n_g, 1) < _INT64_CAP


def count_maps(n_g, adj_g, order, n_h, adj_h, mode, find_one=False, m_h=0):
    if fits_compiled(n_g, n_h, mode, m_h):
        return compiled.count_maps(n_g, list(adj_g), list(order), n_h, list(adj_h), mode, find_one)
    return pure.count_maps(n_g, adj_g, order, n_h, adj_h, mode, find_one)
