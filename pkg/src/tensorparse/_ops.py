"""Backend selection for the sparse-vector kernels.

Prefers the compiled ``_speedups`` extension when it was built; falls
back to the pure-Python twin otherwise.  ``BACKEND`` names the active
implementation so callers (and the benchmark) can report it.
"""

try:
    from . import _speedups as _impl

    BACKEND = "cython"
except ImportError:  # extension not built for this interpreter
    from . import _pyops as _impl

    BACKEND = "python"

dot = _impl.dot
tensor_pair = _impl.tensor_pair
