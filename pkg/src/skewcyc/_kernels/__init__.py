"""Backend selection for the GF(2) kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is used. ``SKEWCYC_BACKEND=pure`` forces the fallback, and
:func:`set_backend` switches at runtime (benchmarks and tests use this).
"""

from __future__ import annotations

import os

from . import _pure

try:
    from . import _native
except ImportError:  # extension not built
    _native = None

_FUNCTIONS = ("gf2_mulmod", "gf2_powmod", "gf2_apply", "gf2_rref", "gf2_rank")

backend = ""


def available_backends() -> list[str]:
    return ["native", "pure"] if _native is not None else ["pure"]


def set_backend(name: str) -> None:
    """Rebind the kernel functions to ``name`` ("native" or "pure")."""
    global backend
    if name == "native":
        if _native is None:
            raise ImportError("compiled kernels are not built")
        module = _native
    elif name == "pure":
        module = _pure
    else:
        raise ValueError(f"unknown backend {name!r}")
    for fn in _FUNCTIONS:
        globals()[fn] = getattr(module, fn)
    backend = name


set_backend("pure" if _native is None or os.environ.get("SKEWCYC_BACKEND") == "pure"
            else "native")
