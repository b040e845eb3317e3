"""Time p-power character tables with the numba kernel, the numpy kernel and the exact engine.

    python benchmarks/bench_kernels.py [--n 12 16 20] [--p 2] [--repeat 3]
"""
import argparse
import time

import numpy as np

from hookvan import kernels
from hookvan.characters import CharacterSession
from hookvan.partitions import partitions_of
from hookvan.sym_groups import ppower_cycle_types


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def exact_table(n, types):
    s = CharacterSession()
    return np.array([[s.value(lam, t) for t in types] for lam in partitions_of(n)], dtype=object)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[12, 16, 20])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-exact-above", type=int, default=20)
    args = ap.parse_args()

    if kernels.HAVE_NUMBA:  # compile outside the timed region
        kernels.character_table(4, ppower_cycle_types(4, 2), use_numba=True)

    print(f"{'n':>3} {'parts':>6} {'types':>6} {'numba s':>9} {'numpy s':>9} {'exact s':>9}  agree")
    for n in args.n:
        types = ppower_cycle_types(n, args.p)
        row = [f"{n:>3}", f"{len(partitions_of(n)):>6}", f"{len(types):>6}"]
        tables = []
        for use_numba in (True, False):
            if use_numba and not kernels.HAVE_NUMBA:
                row.append(f"{'n/a':>9}")
                continue
            dt, (_, table) = best_of(lambda: kernels.character_table(n, types, use_numba), args.repeat)
            row.append(f"{dt:9.4f}")
            tables.append(table)
        if n <= args.skip_exact_above:
            dt, exact = best_of(lambda: exact_table(n, types), 1)
            row.append(f"{dt:9.4f}")
            tables.append(exact.astype(np.int64))
        else:
            row.append(f"{'skipped':>9}")
        agree = all(np.array_equal(tables[0], t) for t in tables[1:])
        print(" ".join(row), "", agree)


if __name__ == "__main__":
    main()
