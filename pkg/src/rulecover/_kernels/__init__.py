"""Tidset kernel selection: compiled Cython core with a numpy fallback.

The backend is chosen once at import. Set RULECOVER_KERNEL=python (or
=cython) to force a backend; "cython" raises if the extension was not
built.
"""

import os

_requested = os.environ.get("RULECOVER_KERNEL", "").strip().lower()

if _requested == "python":
    from . import _tidset_py as _impl

    KERNEL_BACKEND = "python"
elif _requested == "cython":
    from . import _tidset_cy as _impl  # type: ignore[attr-defined]

    KERNEL_BACKEND = "cython"
elif _requested == "":
    try:
        from . import _tidset_cy as _impl  # type: ignore[attr-defined]

        KERNEL_BACKEND = "cython"
    except ImportError:
        from . import _tidset_py as _impl

        KERNEL_BACKEND = "python"
else:
    raise ImportError(f"RULECOVER_KERNEL must be 'cython' or 'python', not {_requested!r}")

intersect = _impl.intersect
union = _impl.union
difference = _impl.difference

__all__ = ["KERNEL_BACKEND", "intersect", "union", "difference"]
