#!/usr/bin/env python3
"""Compare the jit bitmask search kernel against the numpy fallback.

Both backends enumerate the same lexicographic seed subsets, so the timing
difference is pure kernel cost.  Instances are random multi-component
diagrams; the search walks subset sizes upward exactly like
``wirtinger_number``, and both backends must report identical witnesses.

Run from the repository root:

    python3 benchmarks/bench_kernels.py --chords 10 14 18 --repeats 5
"""

import argparse
import random
import statistics
import sys
import time

from vbridge._kernels import (
    HAVE_NUMBA,
    _search_level_jit,
    _search_level_np,
    _saturate_mask_jit,
)
from vbridge.gauss import ensure_tail_per_component, parse_gauss_code, strand_table
from vbridge.search import _arrays

import numpy as np


def random_code(rng: random.Random, n_chords: int, n_comps: int) -> str:
    per_comp = [[] for _ in range(n_comps)]
    for label in range(1, n_chords + 1):
        sign = rng.choice("+-")
        for kind in ("O", "U"):
            comp = rng.randrange(n_comps)
            slot = rng.randint(0, len(per_comp[comp]))
            per_comp[comp].insert(slot, f"{kind}{label}{sign}")
    return "|".join("".join(t) if t else "." for t in per_comp)


def search_with(backend, arrays, n_strands, n_comps):
    before, after, tail, comp_of = arrays
    total_examined = 0
    for k in range(n_comps, n_strands + 1):
        comb, examined, _ = backend(
            before, after, tail, comp_of, n_strands, n_comps, k, None
        )
        total_examined += examined
        if comb is not None:
            return comb, total_examined
    raise AssertionError("all-strand seeding always succeeds")


def bench(args) -> int:
    if not HAVE_NUMBA:
        print("numba is not importable; nothing to compare", file=sys.stderr)
        return 1

    # compile outside the timed region
    _saturate_mask_jit(
        np.zeros(1, dtype=np.int64),
        np.zeros(1, dtype=np.int64),
        np.zeros(1, dtype=np.int64),
        np.int64(1),
    )
    rng = random.Random(args.seed)
    print(f"{'chords':>6} {'strands':>7} {'subsets':>9} {'jit ms':>9} {'numpy ms':>9} {'speedup':>8}")
    for n_chords in args.chords:
        jit_times = []
        np_times = []
        subsets = 0
        for _ in range(args.repeats):
            d = ensure_tail_per_component(
                parse_gauss_code(random_code(rng, n_chords, args.components))
            )
            table = strand_table(d)
            arrays = _arrays(table)
            n, c = table.n_strands, d.n_components

            t0 = time.perf_counter()
            jit_comb, examined = search_with(_search_level_jit, arrays, n, c)
            jit_times.append(time.perf_counter() - t0)

            t0 = time.perf_counter()
            np_comb, _ = search_with(_search_level_np, arrays, n, c)
            np_times.append(time.perf_counter() - t0)

            assert jit_comb == np_comb, "backends disagree on the witness"
            subsets += examined
        jit_ms = statistics.median(jit_times) * 1000
        np_ms = statistics.median(np_times) * 1000
        ratio = np_ms / jit_ms if jit_ms else float("inf")
        print(
            f"{n_chords:>6} {table.n_strands:>7} {subsets:>9} "
            f"{jit_ms:>9.3f} {np_ms:>9.3f} {ratio:>7.1f}x"
        )
    return 0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--chords", type=int, nargs="+", default=[8, 12, 16, 20])
    parser.add_argument("--components", type=int, default=3)
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    return bench(parser.parse_args())


if __name__ == "__main__":
    sys.exit(main())
