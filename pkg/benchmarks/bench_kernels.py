"""Compare the compiled kernels against the pure-Python twins.

Run with:  python3 benchmarks/bench_kernels.py

Times the full pairwise order table on S_5 and S_6, the layered cover
computation on S_6, and a batch of cycle counts, for whichever of the two
implementations import.  Results are wall-clock medians of a few repeats.
"""

import statistics
import sys
import time

import numpy as np

from absorder import _kernels_py
from absorder.order import _perm_array
from absorder.perms import sn_elements

try:
    from absorder import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, *args, repeats=3):
    samples = []
    for _ in range(repeats):
        start = time.perf_counter()
        out = fn(*args)
        samples.append(time.perf_counter() - start)
    return statistics.median(samples), out


def bench_case(name, pure_fn, fast_fn, *args):
    t_pure, out_pure = timed(pure_fn, *args)
    row = [name, "%.4fs" % t_pure]
    if fast_fn is not None:
        t_fast, out_fast = timed(fast_fn, *args)
        if isinstance(out_pure, np.ndarray):
            assert np.array_equal(out_pure, out_fast), name
        else:
            assert out_pure == out_fast, name
        row += ["%.4fs" % t_fast, "%.1fx" % (t_pure / t_fast)]
    else:
        row += ["-", "-"]
    return row


def main():
    rows = [["case", "python", "compiled", "speedup"]]

    for n in (5, 6):
        arr = _perm_array(sn_elements(n))
        rows.append(
            bench_case(
                "leq_table S_%d (%d^2 pairs)" % (n, arr.shape[0]),
                _kernels_py.leq_table,
                _ckernels.leq_table if _ckernels else None,
                arr,
            )
        )

    arr6 = _perm_array(sn_elements(6))
    ranks = np.array([6 - _kernels_py.cycle_count(tuple(r)) for r in arr6])
    low = arr6[ranks == 2]
    high = arr6[ranks == 3]
    rows.append(
        bench_case(
            "leq_cross ranks 2x3 of S_6 (%dx%d)" % (len(low), len(high)),
            _kernels_py.leq_cross,
            _ckernels.leq_cross if _ckernels else None,
            low,
            high,
        )
    )

    def count_all_py(arr):
        return sum(_kernels_py.cycle_count(tuple(r)) for r in arr)

    def count_all_c(arr):
        return sum(_ckernels.cycle_count(r) for r in arr)

    rows.append(
        bench_case(
            "cycle_count over all of S_6",
            count_all_py,
            count_all_c if _ckernels else None,
            arr6,
        )
    )

    widths = [max(len(r[c]) for r in rows) for c in range(4)]
    for r in rows:
        print("  ".join(s.ljust(w) for s, w in zip(r, widths)).rstrip())
    if _ckernels is None:
        print("\ncompiled extension not built; only the pure kernels ran")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
