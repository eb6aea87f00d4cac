"""Backend selection for the hot search kernel.

The compiled ``_ckernels`` module is picked at import when it was built;
otherwise the pure-Python ``_pykernels`` is used.  Both implement the same
search, so results never depend on the backend.  :func:`use` switches
explicitly (the benchmark and the parity tests need both).
"""
from __future__ import annotations

from types import ModuleType

from . import _pykernels


def _compiled() -> ModuleType | None:
    try:
        from . import _ckernels
    except ImportError:
        return None
    return _ckernels


_impl: ModuleType = _compiled() or _pykernels

BACKEND: str = _impl.BACKEND
dsatur_solve = _impl.dsatur_solve
py_dsatur_solve = _pykernels.dsatur_solve


def compiled_available() -> bool:
    return _compiled() is not None


def use(backend: str) -> str:
    """Select ``"python"`` or ``"cython"`` (alias ``"compiled"``); returns the previous name."""
    global _impl, BACKEND, dsatur_solve
    prev = BACKEND
    if backend == "python":
        mod = _pykernels
    elif backend in ("cython", "compiled"):
        mod = _compiled()
        if mod is None:
            raise RuntimeError("compiled kernel is not built")
    else:
        raise ValueError(f"unknown backend {backend!r}")
    _impl, BACKEND, dsatur_solve = mod, mod.BACKEND, mod.dsatur_solve
    return prev
