"""Backend selection: compiled kernels when importable, numpy fallback else.

Set ``HERGLOTZ_LAB_BACKEND=py`` (or ``c``) in the environment to force a
choice before import; `set_backend` switches at runtime (used by tests and
the benchmark).
"""

from __future__ import annotations

import os

from . import _kernels_py

_FORCE = os.environ.get("HERGLOTZ_LAB_BACKEND", "").strip().lower()

_compiled = None
if _FORCE not in ("py", "python", "fallback"):
    try:
        from . import _kernels as _compiled  # type: ignore[no-redef]
    except ImportError:
        _compiled = None
        if _FORCE in ("c", "compiled"):
            raise ImportError(
                "HERGLOTZ_LAB_BACKEND=c requested but the compiled kernels "
                "are not built; reinstall with Cython available")

_active = _compiled if _compiled is not None else _kernels_py

BACKEND = "compiled" if _active is _compiled and _compiled is not None \
    else "python"


def available_backends():
    out = ["python"]
    if _compiled is not None:
        out.insert(0, "compiled")
    return out


def set_backend(name: str) -> str:
    """Switch the active kernel implementation ('compiled' or 'python')."""
    global _active, BACKEND
    if name in ("python", "py", "fallback"):
        _active = _kernels_py
        BACKEND = "python"
    elif name in ("compiled", "c"):
        if _compiled is None:
            raise ValueError("compiled kernels are not available")
        _active = _compiled
        BACKEND = "compiled"
    else:
        raise ValueError(f"unknown backend {name!r}")
    return BACKEND


def psi_vec(z):
    return _active.psi_vec(z)


def fkn_head(k, N, x, M):
    return _active.fkn_head(k, N, x, M)


def pair_head(s, c, b, q, theta, M):
    return _active.pair_head(s, c, b, q, theta, M)


def pair_head_sin(s, c, b, q, theta, a, M):
    return _active.pair_head_sin(s, c, b, q, theta, a, M)
