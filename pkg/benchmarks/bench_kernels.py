"""Compare the compiled and pure-Python word-tree kernels.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Prints one line per (kernel, group, depth) with the best wall time of each
backend and the speed-up.
"""
import argparse
import time

import numpy as np

from fuchsian_schottky import standard_group
from fuchsian_schottky.kernels import get_backend, tree_size
from fuchsian_schottky.system import _letter_discs

CASES = [((1, 1), 8), ((1, 2), 6), ((2, 1), 5), ((1, 5), 4)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py, cy = get_backend("python"), get_backend("cython")
    print(f"{'kernel':<14}{'group':<8}{'depth':>6}{'nodes':>10}{'python s':>12}{'cython s':>12}{'speed-up':>10}")
    for (n, h), depth in CASES:
        sys_ = standard_group(n, h)
        gens = np.array([g.entries for g in sys_.generators])
        discs = _letter_discs(sys_)
        nodes = tree_size(sys_.rank, depth)
        for name, call in (("word_products", lambda k: k.word_products(gens, depth)),
                           ("limit_tree", lambda k: k.limit_tree(gens, discs, depth))):
            t_py = best_of(lambda: call(py), args.repeat)
            t_cy = best_of(lambda: call(cy), args.repeat)
            print(f"{name:<14}{f'G_{n},{h}':<8}{depth:>6}{nodes:>10}{t_py:>12.4f}{t_cy:>12.4f}{t_py / t_cy:>9.1f}x")


if __name__ == "__main__":
    main()
