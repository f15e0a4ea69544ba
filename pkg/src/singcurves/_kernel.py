"""Kernel selection: compiled extension when built, pure Python otherwise.

Set SINGCURVES_PURE=1 to force the pure-Python kernels (used by the
benchmark to compare both implementations in one process via reload).
"""

import os

if os.environ.get("SINGCURVES_PURE"):
    from ._kernel_py import add_terms, axpy_terms, mul_terms, scale_terms

    KERNEL_IMPL = "pure-python (forced)"
else:
    try:
        from ._kernel_c import add_terms, axpy_terms, mul_terms, scale_terms

        KERNEL_IMPL = "cython"
    except ImportError:
        from ._kernel_py import add_terms, axpy_terms, mul_terms, scale_terms

        KERNEL_IMPL = "pure-python"

__all__ = ["add_terms", "axpy_terms", "mul_terms", "scale_terms", "KERNEL_IMPL"]
