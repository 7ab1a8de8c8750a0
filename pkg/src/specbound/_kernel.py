"""Selection between the compiled and the pure-Python Jacobi kernel.

The compiled extension is preferred when importable.  The environment
variable ``SPECBOUND_KERNEL`` forces a choice: ``cython`` (error if the
extension is missing), ``python``, or ``auto`` (the default).
``set_kernel`` switches at runtime, which the benchmark and the kernel
parity tests use.
"""

import os

from . import _jacobi_py

_IMPLS = {"python": _jacobi_py}
try:
    from . import _jacobi_cy

    _IMPLS["cython"] = _jacobi_cy
except ImportError:
    _jacobi_cy = None


def available_kernels():
    return tuple(sorted(_IMPLS))


def set_kernel(name):
    """Select the active kernel; ``auto`` picks compiled when available."""
    global _active, _active_name
    if name == "auto":
        name = "cython" if "cython" in _IMPLS else "python"
    if name not in _IMPLS:
        raise ValueError(
            f"kernel {name!r} not available (have {available_kernels()})"
        )
    _active = _IMPLS[name]
    _active_name = name


def active_kernel():
    return _active_name


def jacobi_sweeps(a, v, tol, max_sweeps):
    return _active.jacobi_sweeps(a, v, tol, max_sweeps)


set_kernel(os.environ.get("SPECBOUND_KERNEL", "auto"))
