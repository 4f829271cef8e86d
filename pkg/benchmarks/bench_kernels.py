"""Time the monomial counting kernels: numba njit versus the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 5]

Also times one end-to-end Hilbert-function sweep in a subprocess per backend,
since SPECTILT_PURE_NUMPY is read at import.
"""

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from spectilt.polycore import _kernels as K


def _best(fn, repeat):
    fn()  # warm-up, includes JIT compilation
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _leads(rng, nvars, count, top):
    return rng.integers(0, top + 1, size=(count, nvars)).astype(np.int64)


SWEEP = (
    "import time; from spectilt.polycore import QQ; from spectilt.ringspec import polynomial_ring;"
    "from spectilt.homalg import FpModule;"
    "R = polynomial_ring(QQ, 'a,b,c,d,e'); A = R.A;"
    "M = FpModule.quotient(R, [A(s) for s in ('a^3*b', 'b^2*c^2', 'c^3*d', 'd^2*e^3', 'a*e^4', 'b*d*e')]);"
    "M.hilbert_function(0); t = time.perf_counter(); v = M.hilbert_values(0, 24);"
    "print(time.perf_counter() - t, sum(v))"
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if not K.NUMBA_AVAILABLE:
        sys.exit("numba is not installed; nothing to compare")
    rng = np.random.default_rng(0)
    rows = []
    for nvars, count, d in ((3, 8, 20), (5, 20, 12), (6, 40, 10), (8, 60, 8)):
        L = _leads(rng, nvars, count, 4)
        n_mons = K.monomials_of_degree(nvars, d).shape[0]
        a = K.count_standard(L, nvars, d, use_numba=True)
        b = K.count_standard(L, nvars, d, use_numba=False)
        assert a == b
        tj = _best(lambda: K.count_standard(L, nvars, d, use_numba=True), args.repeat)
        tn = _best(lambda: K.count_standard(L, nvars, d, use_numba=False), args.repeat)
        rows.append((f"count_standard n={nvars} |L|={count} d={d} ({n_mons} monomials)", tj, tn))
    for nvars, count in ((8, 10), (12, 20), (14, 30)):
        masks = rng.integers(1, 1 << nvars, size=count).astype(np.int64)
        assert K.max_independent(masks, nvars, True) == K.max_independent(masks, nvars, False)
        tj = _best(lambda: K.max_independent(masks, nvars, use_numba=True), args.repeat)
        tn = _best(lambda: K.max_independent(masks, nvars, use_numba=False), args.repeat)
        rows.append((f"max_independent n={nvars} masks={count}", tj, tn))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':<{width}}  {'numba ms':>10}  {'numpy ms':>10}  {'ratio':>7}")
    for name, tj, tn in rows:
        print(f"{name:<{width}}  {tj * 1e3:10.3f}  {tn * 1e3:10.3f}  {tn / tj:7.2f}")

    print()
    for flag, label in (("0", "numba"), ("1", "numpy")):
        env = dict(os.environ, SPECTILT_PURE_NUMPY=flag)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
        t, total = out.stdout.split()
        print(f"hilbert sweep (5 vars, degrees 0..24) {label:>6}: {float(t) * 1e3:8.1f} ms  sum={total}")


if __name__ == "__main__":
    main()
