"""Batched Murnaghan-Nakayama columns on bitmask-encoded partitions.

Every partition of size at most ``n`` is stored as the bitmask of its beta-set
with exactly ``n`` beads, so removing an e-rim-hook is the bit move
``x -> x - e`` and its leg length is the popcount of the bits in between.
A character-table column for a cycle type ``t`` is then built bottom-up:
start from the empty partition with value 1 and add one cycle at a time,
pulling values back along every rim-hook removal.

Two interchangeable backends implement the inner step: a numba ``@njit`` loop
and a vectorised numpy version.  The numba path is used when numba imports
and ``HOOKVAN_DISABLE_NUMBA`` is unset (or ``0``).  Values are int64, which is
exact for ``n <= MAX_N``; larger sizes must go through
:class:`hookvan.characters.CharacterSession`.
"""
from __future__ import annotations

import os
from functools import lru_cache
from typing import Sequence

import numpy as np

from .partitions import Partition, partitions_of

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba installed
    numba = None

__all__ = [
    "MAX_N",
    "HAVE_NUMBA",
    "numba_enabled",
    "partition_masks",
    "mask_of",
    "character_column",
    "character_table",
]

# sqrt(30!) * 60 < 2**63 bounds every partial sum; 2n bit positions fit in 63 bits.
MAX_N = 30

HAVE_NUMBA = numba is not None


def numba_enabled() -> bool:
    flag = os.environ.get("HOOKVAN_DISABLE_NUMBA", "").strip().lower()
    return HAVE_NUMBA and flag in ("", "0", "false", "no")


def mask_of(lam: Sequence[int], beads: int) -> int:
    lam = tuple(lam) + (0,) * (beads - len(lam))
    m = 0
    for i, x in enumerate(lam):
        m |= 1 << (x + beads - 1 - i)
    return m


@lru_cache(maxsize=None)
def partition_masks(s: int, beads: int) -> np.ndarray:
    """Sorted uint64 masks of all partitions of ``s`` on ``beads`` beads."""
    return np.array(sorted(mask_of(lam, beads) for lam in partitions_of(s)), dtype=np.uint64)


def _pull_numpy(new_masks: np.ndarray, old_masks: np.ndarray, old_vals: np.ndarray,
                e: int, width: int) -> np.ndarray:
    out = np.zeros(new_masks.size, dtype=np.int64)
    if width <= e:
        return out
    x = np.arange(e, width, dtype=np.uint64)
    one = np.uint64(1)
    m = new_masks[:, None]
    top = (m >> x) & one
    bottom = (m >> (x - np.uint64(e))) & one
    rows, cols = np.nonzero((top == one) & (bottom == 0))
    if rows.size == 0:
        return out
    xs = x[cols]
    mm = new_masks[rows]
    between = (mm >> (xs - np.uint64(e - 1))) & np.uint64((1 << (e - 1)) - 1)
    odd = np.bitwise_count(between) & 1
    targets = mm ^ (one << xs) ^ (one << (xs - np.uint64(e)))
    vals = old_vals[np.searchsorted(old_masks, targets)]
    np.add.at(out, rows, np.where(odd == 1, -vals, vals))
    return out


def _pull_python_loop(new_masks, old_masks, old_vals, e, width):
    out = np.zeros(new_masks.size, dtype=np.int64)
    span = (1 << (e - 1)) - 1
    for a in range(new_masks.size):
        m = int(new_masks[a])
        acc = 0
        for x in range(e, width):
            if (m >> x) & 1 and not (m >> (x - e)) & 1:
                seg = (m >> (x - e + 1)) & span
                c = 0
                while seg:
                    seg &= seg - 1
                    c += 1
                tgt = m ^ (1 << x) ^ (1 << (x - e))
                v = old_vals[np.searchsorted(old_masks, np.uint64(tgt))]
                acc += -v if c & 1 else v
        out[a] = acc
    return out


if HAVE_NUMBA:
    _pull_numba = numba.njit(cache=True)(_pull_python_loop)
else:  # pragma: no cover
    _pull_numba = None


def _pull(new_masks, old_masks, old_vals, e, width, use_numba):
    if use_numba:
        return _pull_numba(new_masks, old_masks, old_vals, np.int64(e), np.int64(width))
    return _pull_numpy(new_masks, old_masks, old_vals, e, width)


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"kernel supports 0 <= n <= {MAX_N}; use CharacterSession beyond that")


def character_column(n: int, t: Sequence[int], use_numba: bool | None = None) -> np.ndarray:
    """Values chi^lam(t) for every lam of n, indexed like ``partition_masks(n, n)``."""
    _check_n(n)
    t = sorted(int(x) for x in t)
    if sum(t) != n or any(x <= 0 for x in t):
        raise ValueError(f"{t} is not a cycle type of {n}")
    if use_numba is None:
        use_numba = numba_enabled()
    width = 2 * n
    s = 0
    masks = partition_masks(0, n)
    vals = np.ones(1, dtype=np.int64)
    for e in t:
        s += e
        new_masks = partition_masks(s, n)
        vals = _pull(new_masks, masks, vals, e, width, use_numba)
        masks = new_masks
    return vals


def character_table(n: int, types: Sequence[Sequence[int]], use_numba: bool | None = None
                    ) -> tuple[tuple[Partition, ...], np.ndarray]:
    """Character values on the given cycle types, rows in ``partitions_of(n)`` order."""
    _check_n(n)
    parts = partitions_of(n)
    masks = partition_masks(n, n)
    order = np.searchsorted(masks, np.array([mask_of(lam, n) for lam in parts], dtype=np.uint64))
    table = np.zeros((len(parts), len(types)), dtype=np.int64)
    for k, t in enumerate(types):
        table[:, k] = character_column(n, t, use_numba)[order]
    return parts, table
