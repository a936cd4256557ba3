"""Compare the compiled kernels against the numpy fallback.

Runs the four hot operations on identical random inputs through both
backends, checks the outputs agree bit for bit, and prints the timings.

    python3 bench/benchmark_kernels.py [--sizes 256,512,1024] [--repeats 5]
"""

import argparse
import time

import numpy as np

from spinspread import _kernels_py

try:
    from spinspread import _kernels_cy
except ImportError:
    _kernels_cy = None


def random_words(rng, n_rows, n_cols):
    nw = _kernels_py.words_for(n_cols)
    m = rng.integers(0, 2**63, size=(n_rows, nw), dtype=np.uint64) * 2 + rng.integers(
        0, 2, size=(n_rows, nw), dtype=np.uint64
    )
    tail = n_cols % 64
    if tail:
        m[:, -1] &= np.uint64((1 << tail) - 1)
    return np.ascontiguousarray(m)


def timed(fn, repeats):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_size(n, repeats, rng):
    a = random_words(rng, n, n)
    b = random_words(rng, n, n)
    wide = random_words(rng, n, 2 * n)
    rows = []

    def run(name, py_fn, cy_fn, same=lambda x, y: np.array_equal(x, y)):
        t_py, r_py = timed(py_fn, repeats)
        if _kernels_cy is None:
            rows.append((name, t_py, None, None))
            return
        t_cy, r_cy = timed(cy_fn, repeats)
        if not same(r_py, r_cy):
            raise SystemExit(f"backend mismatch in {name} at size {n}")
        rows.append((name, t_py, t_cy, t_py / t_cy))

    run(
        "echelonize",
        lambda: (_kernels_py.echelonize(wide.copy(), 2 * n)),
        lambda: (_kernels_cy.echelonize(wide.copy(), 2 * n)),
        same=lambda x, y: list(x) == list(y),
    )
    run(
        "mul",
        lambda: _kernels_py.mul(a, n, b, n),
        lambda: _kernels_cy.mul(a, n, b, n),
    )
    run(
        "mul_bt",
        lambda: _kernels_py.mul_bt(a, b, n),
        lambda: _kernels_cy.mul_bt(a, b, n),
    )
    run(
        "transpose",
        lambda: _kernels_py.transpose(a, n),
        lambda: _kernels_cy.transpose(a, n),
    )
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="256,512,1024")
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(1)

    if _kernels_cy is None:
        print("compiled backend unavailable, timing the fallback only")
    header = f"{'op':<12}{'n':>6}{'python':>12}{'compiled':>12}{'speedup':>9}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        for name, t_py, t_cy, ratio in bench_size(n, args.repeats, rng):
            cy = f"{t_cy * 1e3:9.2f}ms" if t_cy is not None else f"{'-':>11}"
            sp = f"{ratio:8.1f}x" if ratio is not None else f"{'-':>9}"
            print(f"{name:<12}{n:>6}{t_py * 1e3:9.2f}ms{cy}{sp}")


if __name__ == "__main__":
    main()
