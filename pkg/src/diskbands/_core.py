"""Kernel lane selection.

Imports the compiled kernels when available, falling back to the pure-Python
mirror.  Set ``DISKBANDS_BACKEND=python`` to force the fallback or
``DISKBANDS_BACKEND=c`` to require the extension (ImportError if missing).
"""

from __future__ import annotations

import os

_choice = os.environ.get("DISKBANDS_BACKEND", "").strip().lower()

if _choice not in ("", "c", "python"):
    raise ImportError(
        "DISKBANDS_BACKEND must be 'c' or 'python', got %r" % _choice
    )

if _choice in ("", "c"):
    try:
        from ._kernels import (  # type: ignore[attr-defined]
            BACKEND,
            bessel_j_kernel,
            tridiag_smallest_eigenvalues,
        )
    except ImportError:
        if _choice == "c":
            raise
        from ._kernels_py import (
            BACKEND,
            bessel_j_kernel,
            tridiag_smallest_eigenvalues,
        )
else:
    from ._kernels_py import (
        BACKEND,
        bessel_j_kernel,
        tridiag_smallest_eigenvalues,
    )

__all__ = ["BACKEND", "bessel_j_kernel", "tridiag_smallest_eigenvalues"]
