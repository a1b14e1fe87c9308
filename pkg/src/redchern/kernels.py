"""Kernel backend selection.

Imports the compiled kernels when the extension module is available,
otherwise the pure-Python fallbacks.  Set REDCHERN_KERNEL=python to force
the fallback, REDCHERN_KERNEL=compiled to require the extension (raising
ImportError when it was not built).  BACKEND reports what was selected.

Both backends are contractually identical; tests assert equality on random
inputs, and benchmarks/bench_kernels.py compares their speed.
"""

import os

_requested = os.environ.get("REDCHERN_KERNEL", "").strip().lower()

if _requested in ("python", "py", "pure"):
    from redchern._mulcore_py import expand_linear_chain, mul_trunc

    BACKEND = "python"
elif _requested in ("compiled", "c", "cython"):
    from redchern._mulcore import expand_linear_chain, mul_trunc  # type: ignore[no-redef]

    BACKEND = "compiled"
elif _requested == "":
    try:
        from redchern._mulcore import expand_linear_chain, mul_trunc  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        from redchern._mulcore_py import expand_linear_chain, mul_trunc

        BACKEND = "python"
else:
    raise ValueError(f"unknown REDCHERN_KERNEL value: {_requested!r}")

__all__ = ["BACKEND", "expand_linear_chain", "mul_trunc"]
