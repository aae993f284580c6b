"""Select the word-tree backend at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise
(or when ``FUCHSIAN_SCHOTTKY_PURE=1``) the pure-Python ``_pykernels``.
"""
import os

from . import _pykernels

if os.environ.get("FUCHSIAN_SCHOTTKY_PURE", "") not in ("", "0"):
    _impl = _pykernels
else:
    try:
        from . import _ckernels as _impl
    except ImportError:
        _impl = _pykernels

BACKEND = "cython" if _impl is not _pykernels else "python"

tree_size = _pykernels.tree_size
word_products = _impl.word_products
limit_tree = _impl.limit_tree


def get_backend(name):
    """Return the kernel module called ``name`` ("cython" or "python")."""
    if name == "python":
        return _pykernels
    if name == "cython":
        from . import _ckernels
        return _ckernels
    raise ValueError(f"unknown backend {name!r}")
