"""Exact linear systems of singular plane curves and quartic double planes."""

from ._kernel import KERNEL_IMPL
from .field import QQ, FieldContext, FieldElement, make_extension, rat
from .poly import MPoly, PolyRing

__version__ = "0.1.0"

__all__ = [
    "KERNEL_IMPL",
    "QQ",
    "FieldContext",
    "FieldElement",
    "MPoly",
    "PolyRing",
    "make_extension",
    "rat",
    "__version__",
]
