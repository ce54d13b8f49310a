"""Kernel backend selection.

Imports the compiled kernels when available, the pure-Python ones
otherwise.  Set QRULES_PURE_PYTHON=1 to force the fallback (used by the
benchmark and by tests that must exercise both paths).
"""

import os

if os.environ.get("QRULES_PURE_PYTHON"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pykernels as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
conv_obj = _impl.conv_obj
conv_mod = _impl.conv_mod
axpy_obj = _impl.axpy_obj
axpy_mod = _impl.axpy_mod
