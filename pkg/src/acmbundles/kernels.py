"""Backend selection for the hot loops.

The compiled extension is used when it imports; setting
``ACMBUNDLES_PURE_PYTHON=1`` forces the pure-Python kernels.
"""
import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("ACMBUNDLES_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

BACKEND = "cython" if compiled_backend is not None else "python"
_impl = compiled_backend if compiled_backend is not None else python_backend

# bound keeps every intermediate of the int64 kernel far from overflow
_SAFE = 10**5


def scan_chern(r, k, c1_range, c2_range, twists, targets, backend=None):
    impl = _impl
    if backend == "python":
        impl = python_backend
    elif backend == "cython":
        if compiled_backend is None:
            raise RuntimeError("compiled kernels are not available")
        impl = compiled_backend
    c1_lo, c1_hi = c1_range
    c2_lo, c2_hi = c2_range
    big = max(abs(c1_lo), abs(c1_hi), abs(c2_lo), abs(c2_hi),
              *(abs(n) for n in twists), *(abs(t) // 1000 for t in targets))
    if big > _SAFE:
        impl = python_backend
    return impl.scan_chern(r, k, c1_lo, c1_hi, c2_lo, c2_hi, list(twists), list(targets))
