"""Kernel selection: compiled extension when available, pure Python otherwise.

``IMPLEMENTATION`` reports which one is active ("c" or "python").  Both
expose the same four functions with identical semantics; the test suite
checks them against each other, and benchmarks/bench_kernels.py compares
their speed.
"""

try:
    from . import _ckernels as _impl
except ImportError:  # extension not built; fall back
    from . import _kernels_py as _impl

IMPLEMENTATION = _impl.IMPLEMENTATION
cycle_count = _impl.cycle_count
quotient_cycle_count = _impl.quotient_cycle_count
leq_table = _impl.leq_table
leq_cross = _impl.leq_cross
