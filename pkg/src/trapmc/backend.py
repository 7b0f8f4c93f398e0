"""Kernel backend selection.

The compiled extension is preferred when importable; the NumPy fallback
is used otherwise.  Set ``TRAPMC_BACKEND=python`` or ``=compiled`` to
force a choice (forcing ``compiled`` raises if the extension is absent).
Both backends produce bit-identical results, so the choice never affects
output values, only speed.
"""

from __future__ import annotations

import os

from . import _kernels_py


def _select():
    forced = os.environ.get("TRAPMC_BACKEND", "").strip().lower()
    if forced == "python":
        return _kernels_py
    try:
        from . import _kernels  # type: ignore[attr-defined]
    except ImportError:
        if forced == "compiled":
            raise ImportError(
                "TRAPMC_BACKEND=compiled but the trapmc._kernels extension "
                "is not built; reinstall with Cython and a C compiler"
            )
        return _kernels_py
    return _kernels


kernels = _select()
BACKEND = kernels.BACKEND_NAME


def available_backends() -> list[str]:
    names = ["python"]
    try:
        from . import _kernels  # noqa: F401
    except ImportError:
        pass
    else:
        names.insert(0, "compiled")
    return names
