"""Backend selection for the enumeration hot kernels.

Two interchangeable implementations exist: a numba ``@njit`` backend (default)
and a pure-numpy fallback.  ``FLAGDOM_BACKEND=numpy`` forces the fallback,
``FLAGDOM_BACKEND=numba`` requires numba (import errors propagate), anything
else picks numba when importable.  Both kernels operate on vectors in the
fundamental-weight coordinates of a dominant start vector; see
``benchmarks/bench_backends.py`` for a timing comparison.
"""

from __future__ import annotations

import os

__all__ = ["backend_name", "chamber_orbit", "canonical_words"]


def _select():
    choice = os.environ.get("FLAGDOM_BACKEND", "auto").strip().lower()
    if choice not in ("numpy", "numba", "auto", ""):
        raise ValueError(f"FLAGDOM_BACKEND must be 'numba' or 'numpy', got {choice!r}")
    if choice == "numpy":
        from . import _numpy_impl as impl
    elif choice == "numba":
        from . import _numba_impl as impl
    else:
        try:
            from . import _numba_impl as impl
        except ImportError:
            from . import _numpy_impl as impl
    return impl


_impl = _select()

chamber_orbit = _impl.chamber_orbit
canonical_words = _impl.canonical_words


def backend_name() -> str:
    """Name of the active kernel backend ('numba' or 'numpy')."""
    return _impl.BACKEND
