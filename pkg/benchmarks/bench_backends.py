#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot kernels (chamber-orbit enumeration and canonical-word
reconstruction) over full Weyl groups of increasing size.  The numba numbers
exclude JIT compilation (one warmup call per kernel); pass --full for the
larger groups.

Usage: python benchmarks/bench_backends.py [--full] [--repeat N]
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

import numpy as np

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from flagdom.kernels import _numba_impl, _numpy_impl  # noqa: E402
from flagdom.rootsys import build_root_system, weyl_order  # noqa: E402

QUICK = [("A", 4), ("B", 4), ("A", 5), ("B", 5), ("D", 5)]
FULL = QUICK + [("A", 6), ("D", 6), ("A", 7), ("B", 6), ("B", 7)]


def setup(family, rank):
    rs = build_root_system(family, rank)
    cartan = rs.cartan_array()
    start = np.ones(rank, dtype=np.int64)
    bound = max(sum(d) for d in rs.positive_coroots)
    return cartan, start, bound, weyl_order(family, rank)


def best_of(repeat, fn, *args):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--full", action="store_true", help="include the larger groups")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    cases = FULL if args.full else QUICK

    # warm up the JIT so compile time stays out of the measurements
    cartan, start, bound, order = setup("A", 2)
    vectors, _ = _numba_impl.chamber_orbit(cartan, start, bound, order)
    _numba_impl.canonical_words(cartan, vectors)

    header = f"{'type':>6} {'|W|':>9} {'kernel':>16} {'numpy':>10} {'numba':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for family, rank in cases:
        cartan, start, bound, order = setup(family, rank)
        t_np, (v_np, l_np) = best_of(args.repeat, _numpy_impl.chamber_orbit,
                                     cartan, start, bound, order)
        t_nb, (v_nb, l_nb) = best_of(args.repeat, _numba_impl.chamber_orbit,
                                     cartan, start, bound, order)
        assert (v_np == v_nb).all() and (l_np == l_nb).all()
        print(f"{family}{rank:<5} {order:>9} {'chamber_orbit':>16} "
              f"{t_np:>9.4f}s {t_nb:>9.4f}s {t_np / t_nb:>7.1f}x")
        t_np, (w_np, o_np) = best_of(args.repeat, _numpy_impl.canonical_words,
                                     cartan, v_np)
        t_nb, (w_nb, o_nb) = best_of(args.repeat, _numba_impl.canonical_words,
                                     cartan, v_nb)
        assert (w_np == w_nb).all() and (o_np == o_nb).all()
        print(f"{'':>6} {'':>9} {'canonical_words':>16} "
              f"{t_np:>9.4f}s {t_nb:>9.4f}s {t_np / t_nb:>7.1f}x")


if __name__ == "__main__":
    main()
