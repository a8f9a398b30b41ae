"""
Backend selection for the hopping kernels.

The compiled ``_kernels`` extension is used when it imports; otherwise, or
when ``DEMHOP_PURE_PYTHON=1`` is set, the pure-Python ``_kernels_py`` module
is used.  ``BACKEND`` names the active choice.
"""

import os

from . import _kernels_py as pure

__all__ = ["BACKEND", "hop_a", "hop_signed", "star_a", "star_signed", "pure", "compiled"]

compiled = None
if os.environ.get("DEMHOP_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernels as compiled
    except ImportError:
        compiled = None

_impl = compiled if compiled is not None else pure
BACKEND = "cython" if compiled is not None else "python"

hop_a = _impl.hop_a
hop_signed = _impl.hop_signed
star_a = _impl.star_a
star_signed = _impl.star_signed
