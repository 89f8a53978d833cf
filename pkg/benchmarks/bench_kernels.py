#!/usr/bin/env python3
"""Compare the compiled kernels against the numpy fallback.

Runs the same workloads through both backends and prints wall-clock
timings and speedups. The two backends share an API, so any divergence
in results is reported as an error.

    python3 benchmarks/bench_kernels.py [--prime 6323] [--repeat 5]
"""

import argparse
import time

import numpy as np

from optcurves import _kernels_py as pure

try:
    from optcurves import _kernels as compiled
except ImportError:
    compiled = None


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, make_pure, make_compiled, repeat):
    tp, rp = timed(make_pure, repeat)
    if compiled is None:
        print(f"{name:24s} pure {tp * 1e3:9.2f} ms   (no compiled backend)")
        return
    tc, rc = timed(make_compiled, repeat)
    match = np.array_equal(np.asarray(rp), np.asarray(rc))
    flag = "" if match else "   RESULTS DIFFER"
    print(f"{name:24s} pure {tp * 1e3:9.2f} ms   compiled {tc * 1e3:9.2f} ms"
          f"   x{tp / tc:6.1f}{flag}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--prime", type=int, default=6323)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    p = args.prime

    chi_p = pure.chi_table(p)
    chi_c = compiled.chi_table(p) if compiled else None
    coeffs = [3, 1, 4, 1, 5, 9, 2]

    print(f"p = {p}, repeat = {args.repeat} (best of)")
    bench("chi_table",
          lambda: pure.chi_table(p),
          lambda: compiled.chi_table(p), args.repeat)
    bench("poly_char_sum deg 6",
          lambda: pure.poly_char_sum(coeffs, p, chi_p),
          lambda: compiled.poly_char_sum(coeffs, p, chi_c), args.repeat)
    bench("ec_trace",
          lambda: pure.ec_trace(2, 221, p, chi_p),
          lambda: compiled.ec_trace(2, 221, p, chi_c), args.repeat)
    bench("branch_sweep",
          lambda: pure.branch_sweep(2, 221, p, chi_p),
          lambda: compiled.branch_sweep(2, 221, p, chi_c), args.repeat)
    bench("fifth_power_table",
          lambda: pure.fifth_power_table(p),
          lambda: compiled.fifth_power_table(p), args.repeat)


if __name__ == "__main__":
    main()
