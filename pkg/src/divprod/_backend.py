"""Kernel selection: compiled extension when available, pure Python otherwise.

Selected once at import.  ``DIVPROD_BACKEND`` overrides: ``cython`` demands
the compiled kernel (ImportError if missing), ``python`` forces the fallback,
anything else (or unset) means auto-detect.
"""

from __future__ import annotations

import os


def load_backend(name: str):
    if name in ("cython", "c"):
        from . import _kernel
        return _kernel
    if name in ("python", "py"):
        from . import _kernel_py
        return _kernel_py
    raise ValueError(f"unknown backend {name!r}")


def available_backends() -> list[str]:
    out = []
    try:
        load_backend("cython")
        out.append("cython")
    except ImportError:
        pass
    out.append("python")
    return out


_forced = os.environ.get("DIVPROD_BACKEND", "auto").strip().lower()
if _forced in ("", "auto"):
    try:
        kernel = load_backend("cython")
    except ImportError:
        kernel = load_backend("python")
else:
    kernel = load_backend(_forced)


def backend_name() -> str:
    return kernel.BACKEND
