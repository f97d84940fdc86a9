"""Select the Boolean kernel implementation at import time."""

try:
    from . import _boolkern as kernels
    COMPILED = True
except ImportError:  # extension not built
    from . import _boolkern_py as kernels
    COMPILED = False

from . import _boolkern_py as python_kernels

__all__ = ["kernels", "python_kernels", "COMPILED"]
