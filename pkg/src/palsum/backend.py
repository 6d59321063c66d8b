"""Selection between the compiled digit kernels and the pure-Python fallback.

The compiled module is preferred when importable.  Set PALSUM_BACKEND=py or
PALSUM_BACKEND=c to force a choice (forcing "c" fails loudly if the
extension was not built).
"""

import importlib
import os

_NAMES = {
    "c": "palsum._digitops",
    "compiled": "palsum._digitops",
    "py": "palsum._digitops_py",
    "pure": "palsum._digitops_py",
}

_active = None


def get(kind):
    """Import and return a specific kernel module ("c" or "py")."""
    try:
        return importlib.import_module(_NAMES[kind])
    except KeyError:
        raise ValueError(f"unknown backend {kind!r}; use 'c' or 'py'") from None


def available():
    """Names of the backends importable in this environment."""
    out = []
    try:
        get("c")
        out.append("c")
    except ImportError:
        pass
    out.append("py")
    return out


def active():
    """The kernel module in use, honoring PALSUM_BACKEND on first call."""
    global _active
    if _active is None:
        forced = os.environ.get("PALSUM_BACKEND")
        if forced:
            _active = get(forced)
        else:
            try:
                _active = get("c")
            except ImportError:
                _active = get("py")
    return _active


def name():
    return active().BACKEND
