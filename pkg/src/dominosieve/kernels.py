"""Hot enumeration kernels, compiled when available.

The Cython extension ``_kernels`` is used if it was built; otherwise the
pure-Python ``_pykernels`` is used. Inputs beyond the compiled kernel's
64-cell word size always go to the Python implementation.
"""
from dominosieve import _pykernels

try:
    from dominosieve import _kernels as _compiled
except ImportError:
    _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"
_WORD = 64


def _pick(size):
    if _compiled is not None and size <= _WORD:
        return _compiled
    return _pykernels


def tile_shape(parts):
    return _pick(sum(parts)).tile_shape(parts)


def count_tilings(parts):
    return _pick(sum(parts)).count_tilings(parts)


def linear_extensions(preds):
    return _pick(len(preds)).linear_extensions(preds)


def count_linear_extensions(preds):
    return _pick(len(preds)).count_linear_extensions(preds)
