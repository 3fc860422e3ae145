"""Saturation and seed-subset search kernels.

Two interchangeable backends compute the same results: numba @njit bitmask
kernels (default) and a pure-numpy fallback.  Set VBRIDGE_NO_NUMBA=1 to
force the fallback; it is also used automatically when numba is missing or
a diagram has more than MASK_LIMIT strands (the jit kernels pack the
colored set into one int64).  Subset enumeration is lexicographic in both
backends, so the reported witnesses are identical.
"""

from __future__ import annotations

import itertools
import os
import time
from typing import Optional, Sequence

import numpy as np

MASK_LIMIT = 62
_CHUNK = 1 << 15
_NP_CHECK_EVERY = 256


def _env_disabled() -> bool:
    return os.environ.get("VBRIDGE_NO_NUMBA", "").lower() in {"1", "true", "yes", "on"}


try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag instead
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and not _env_disabled()


if HAVE_NUMBA:

    @njit(cache=True, nogil=True)
    def _saturate_mask_jit(before, after, tail, mask):
        n_heads = before.shape[0]
        changed = True
        while changed:
            changed = False
            for i in range(n_heads):
                if (mask >> tail[i]) & 1:
                    b = (mask >> before[i]) & 1
                    a = (mask >> after[i]) & 1
                    if b != a:
                        mask |= (np.int64(1) << before[i]) | (np.int64(1) << after[i])
                        changed = True
        return mask

    @njit(cache=True, nogil=True)
    def _search_chunk_jit(before, after, tail, comp_of, n_strands, n_comps, comb, max_visits):
        # comb holds the next combination to test; returns status 1 (found,
        # comb is the winner), -1 (enumeration exhausted) or 0 (budget hit,
        # comb is the resume point), plus the number of saturations run.
        full = (np.int64(1) << np.int64(n_strands)) - np.int64(1)
        allc = (np.int64(1) << np.int64(n_comps)) - np.int64(1)
        k = comb.shape[0]
        visits = 0
        examined = 0
        while True:
            smask = np.int64(0)
            cmask = np.int64(0)
            for i in range(k):
                smask |= np.int64(1) << comb[i]
                cmask |= np.int64(1) << np.int64(comp_of[comb[i]])
            if cmask == allc:
                examined += 1
                if _saturate_mask_jit(before, after, tail, smask) == full:
                    return 1, examined
            visits += 1
            i = k - 1
            while i >= 0 and comb[i] == n_strands - k + i:
                i -= 1
            if i < 0:
                return -1, examined
            comb[i] += 1
            for j in range(i + 1, k):
                comb[j] = comb[j - 1] + 1
            if visits >= max_visits:
                return 0, examined


def _saturate_np(before, after, tail, colored):
    """Vectorized closure of the coloring-move operator on a bool array."""
    while True:
        fire = colored[tail] & (colored[before] ^ colored[after])
        if not fire.any():
            return colored
        colored[before[fire]] = True
        colored[after[fire]] = True


def _search_level_np(before, after, tail, comp_of, n_strands, n_comps, k, deadline):
    need = frozenset(range(n_comps))
    comp_list = [int(c) for c in comp_of]
    examined = 0
    if deadline is not None and time.monotonic() >= deadline:
        return None, examined, True
    for i, comb in enumerate(itertools.combinations(range(n_strands), k)):
        if deadline is not None and i % _NP_CHECK_EVERY == 0 and time.monotonic() >= deadline:
            return None, examined, True
        if {comp_list[s] for s in comb} != need:
            continue
        examined += 1
        colored = np.zeros(n_strands, dtype=bool)
        colored[list(comb)] = True
        if _saturate_np(before, after, tail, colored).all():
            return comb, examined, False
    return None, examined, False


def _search_level_jit(before, after, tail, comp_of, n_strands, n_comps, k, deadline):
    comb = np.arange(k, dtype=np.int64)
    examined = 0
    while True:
        if deadline is not None and time.monotonic() >= deadline:
            return None, examined, True
        status, ex = _search_chunk_jit(
            before, after, tail, comp_of, n_strands, n_comps, comb, _CHUNK
        )
        examined += ex
        if status == 1:
            return tuple(int(x) for x in comb), examined, False
        if status == -1:
            return None, examined, False


def search_level(
    before: np.ndarray,
    after: np.ndarray,
    tail: np.ndarray,
    comp_of: np.ndarray,
    n_strands: int,
    n_comps: int,
    k: int,
    deadline: Optional[float] = None,
):
    """First size-k strand subset (lexicographic) that covers every
    component and saturates to the full strand set.

    Returns (combination or None, saturations examined, timed_out).
    """
    if USE_NUMBA and n_strands <= MASK_LIMIT:
        return _search_level_jit(before, after, tail, comp_of, n_strands, n_comps, k, deadline)
    return _search_level_np(before, after, tail, comp_of, n_strands, n_comps, k, deadline)


def saturate(
    before: np.ndarray,
    after: np.ndarray,
    tail: np.ndarray,
    n_strands: int,
    seed_ids: Sequence[int],
) -> frozenset:
    """Closure of the coloring-move operator; returns colored strand ids."""
    if USE_NUMBA and n_strands <= MASK_LIMIT:
        mask = 0
        for s in seed_ids:
            mask |= 1 << int(s)
        out = int(_saturate_mask_jit(before, after, tail, np.int64(mask)))
        return frozenset(i for i in range(n_strands) if (out >> i) & 1)
    colored = np.zeros(n_strands, dtype=bool)
    for s in seed_ids:
        colored[int(s)] = True
    _saturate_np(before, after, tail, colored)
    return frozenset(int(i) for i in np.flatnonzero(colored))
