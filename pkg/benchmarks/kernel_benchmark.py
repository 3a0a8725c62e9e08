"""Time the compiled evaluation kernels against the numpy fallback.

Runs the same workloads through ``polytorus._ext`` and
``polytorus._kernels_py`` directly, so both backends can be measured in one
process no matter which one the package selected at import.
"""

import argparse
import time

import numpy as np

from polytorus import _kernels_py, rng

try:
    from polytorus import _ext
except ImportError:
    _ext = None


def _best_time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _trig_inputs(terms, points, dims, seed=0):
    gen = rng.generator(seed, rng.STREAM_TRIAL, 0)
    alpha = gen.integers(-8, 9, size=(terms, dims)).astype(np.int64)
    coeffs = gen.standard_normal(terms) + 1j * gen.standard_normal(terms)
    theta = gen.random((points, dims)) * 2.0 * np.pi
    return (np.ascontiguousarray(alpha), np.ascontiguousarray(coeffs.real),
            np.ascontiguousarray(coeffs.imag), np.ascontiguousarray(theta))


def _exp_inputs(terms, points, seed=0):
    gen = rng.generator(seed, rng.STREAM_TRIAL, 1)
    lam = np.sort(gen.random(terms) * 10.0)
    coeffs = gen.standard_normal(terms) + 1j * gen.standard_normal(terms)
    s = gen.random(points) * 0.5 + 1j * (gen.random(points) * 200.0 - 100.0)
    return (np.ascontiguousarray(lam), np.ascontiguousarray(coeffs.real),
            np.ascontiguousarray(coeffs.imag), np.ascontiguousarray(s.real),
            np.ascontiguousarray(s.imag))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=20_000)
    parser.add_argument("--dims", type=int, default=3)
    parser.add_argument("--terms", default="64,512,4096",
                        help="comma-separated term counts")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    if _ext is None:
        print("compiled extension not available; timing the fallback only")

    header = f"{'kernel':<10} {'terms':>6} {'points':>7} {'python s':>10} {'compiled s':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for terms in (int(t) for t in args.terms.split(",")):
        trig = _trig_inputs(terms, args.points, args.dims)
        t_py = _best_time(lambda: _kernels_py.eval_trig(*trig), args.repeats)
        if _ext is not None:
            t_cy = _best_time(lambda: _ext.eval_trig(*trig), args.repeats)
            ref = _kernels_py.eval_trig(*trig)
            got = _ext.eval_trig(*trig)
            err = float(np.abs(ref - got).max())
            if err > 1e-9 * max(1.0, float(np.abs(ref).max())):
                raise AssertionError(f"backend mismatch in eval_trig: {err}")
            print(f"{'trig':<10} {terms:>6} {args.points:>7} {t_py:>10.4f} "
                  f"{t_cy:>11.4f} {t_py / t_cy:>8.2f}")
        else:
            print(f"{'trig':<10} {terms:>6} {args.points:>7} {t_py:>10.4f} {'-':>11} {'-':>8}")

        expi = _exp_inputs(terms, args.points)
        t_py = _best_time(lambda: _kernels_py.eval_exp(*expi), args.repeats)
        if _ext is not None:
            t_cy = _best_time(lambda: _ext.eval_exp(*expi), args.repeats)
            ref = _kernels_py.eval_exp(*expi)
            got = _ext.eval_exp(*expi)
            err = float(np.abs(ref - got).max())
            if err > 1e-9 * max(1.0, float(np.abs(ref).max())):
                raise AssertionError(f"backend mismatch in eval_exp: {err}")
            print(f"{'exp':<10} {terms:>6} {args.points:>7} {t_py:>10.4f} "
                  f"{t_cy:>11.4f} {t_py / t_cy:>8.2f}")
        else:
            print(f"{'exp':<10} {terms:>6} {args.points:>7} {t_py:>10.4f} {'-':>11} {'-':>8}")


if __name__ == "__main__":
    main()
