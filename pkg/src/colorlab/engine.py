"""Search-kernel backend selection.

The hot loops live twice: ``colorlab._kernels`` is a compiled Cython module,
``colorlab._kernels_py`` is the pure-Python reference.  Both implement the
identical algorithm, so everything above this layer is backend-agnostic.  At
import time we prefer the compiled module and fall back to the reference;
set ``COLORLAB_PURE=1`` to force the reference (useful for debugging and for
timing comparisons).
"""

from __future__ import annotations

import os

from colorlab import _kernels_py


def _pick():
    if os.environ.get("COLORLAB_PURE"):
        return _kernels_py
    try:
        from colorlab import _kernels  # noqa: PLC0415

        return _kernels
    except ImportError:
        return _kernels_py


_impl = _pick()

BACKEND_NAME: str = _impl.BACKEND_NAME

UNSAT: int = _impl.UNSAT
SAT: int = _impl.SAT
EXHAUSTED: int = _impl.EXHAUSTED

MODE_DECIDE: int = _impl.MODE_DECIDE
MODE_COUNT: int = _impl.MODE_COUNT
MODE_ENUM: int = _impl.MODE_ENUM

solve_colors = _impl.solve_colors
hamilton_cycle = _impl.hamilton_cycle


def available_backends() -> dict:
    """Importable kernel modules, keyed by backend name.

    Always contains ``"python"``; contains ``"cython"`` too when the
    compiled extension built.  Used by the parity tests and the benchmark.
    """
    found = {_kernels_py.BACKEND_NAME: _kernels_py}
    try:
        from colorlab import _kernels  # noqa: PLC0415

        found[_kernels.BACKEND_NAME] = _kernels
    except ImportError:
        pass
    return found
