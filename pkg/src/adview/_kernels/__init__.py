"""Split-scan kernel selection.

The compiled Cython kernel is preferred when its extension module built;
otherwise the numpy fallback is used. ADVIEW_KERNEL=python|cython forces a
backend (cython raises if the extension is missing). Both backends are
bit-identical, so the choice affects speed only.
"""

import os

_requested = os.environ.get("ADVIEW_KERNEL", "auto").lower()
if _requested not in {"auto", "cython", "python"}:
    raise ImportError(f"ADVIEW_KERNEL must be auto, cython or python, got {_requested!r}")

if _requested == "python":
    from adview._kernels._split_py import scan_feature

    BACKEND = "python"
else:
    try:
        from adview._kernels._split_cy import scan_feature

        BACKEND = "cython"
    except ImportError:
        if _requested == "cython":
            raise
        from adview._kernels._split_py import scan_feature

        BACKEND = "python"

__all__ = ["scan_feature", "BACKEND"]
