"""Benchmark the compiled kernels against the pure-Python reference.

Run:  python benchmarks/bench_kernels.py
"""

import cmath
import time

import numpy as np

from hypermono.kernels import _ref

try:
    from hypermono.kernels import _fast
except ImportError:
    _fast = None


def best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench(name, make_job):
    ref_t = best_of(make_job(_ref))
    line = f"{name:<34} ref {ref_t * 1e3:9.3f} ms"
    if _fast is not None:
        fast_t = best_of(make_job(_fast))
        line += f"   fast {fast_t * 1e3:9.3f} ms   speedup {ref_t / fast_t:6.1f}x"
    print(line)


def main():
    rng = np.random.default_rng(12345)
    zs = [complex(a, b) for a, b in zip(rng.uniform(0.6, 8, 5000), rng.uniform(-8, 8, 5000))]
    ts = np.linspace(-30.0, 30.0, 20001)
    alphas = np.array([0.2, 0.4, 0.6, 0.8])
    betas = np.ones(4)
    log_z = cmath.log(0.5) + 1j * cmath.pi

    print(f"compiled kernels available: {_fast is not None}\n")
    bench("lgamma, 5000 scalar calls", lambda impl: lambda: [impl.lgamma(z) for z in zs])
    bench(
        "mb_integrand, 20001-node batch n=4",
        lambda impl: lambda: impl.mb_integrand(ts, -0.1, alphas, betas, -4, log_z),
    )
    bench("zeta(3), 100000 terms", lambda impl: lambda: impl.zeta(3))


if __name__ == "__main__":
    main()
