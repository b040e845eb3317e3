"""Exact irreducible character values of S_n and A_n.

Degrees come from the hook length formula.  Values come from the
Murnaghan-Nakayama recursion on beta-sets: removing a rim hook of length e
moves one bead down e places, and the leg length is the number of beads
jumped over.  Everything is Python ``int``; no value is ever rounded.
"""
from __future__ import annotations

import threading
from collections import OrderedDict
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial, prod
from typing import Literal, Sequence

from .abacus import core_and_quotient, from_core_and_quotient
from .partitions import Partition, conjugate, hook_lengths, is_self_conjugate
from .sym_groups import is_even_type, is_split_class

__all__ = [
    "CharacterId",
    "CharacterSession",
    "UNSUPPORTED_SPLIT_CLASS",
    "degree",
    "value",
    "value_alt",
    "rim_hook_removals",
    "sign_between",
    "path_count",
    "path_count_formula",
    "default_session",
]

DEFAULT_CACHE_CAP = 2_000_000


class _Signal(Enum):
    UNSUPPORTED_SPLIT_CLASS = "unsupported-split-class"

    def __repr__(self) -> str:
        return self.value

    __str__ = __repr__


UNSUPPORTED_SPLIT_CLASS = _Signal.UNSUPPORTED_SPLIT_CLASS


@dataclass(frozen=True)
class CharacterId:
    """An irreducible character of S_n or A_n.

    For A_n the labels ``lam`` and ``lam'`` name the same character unless
    ``lam`` is self-conjugate, in which case ``branch`` picks one of the two
    constituents.  A self-conjugate label without a branch stands for the
    restriction of chi^lam, i.e. the sum of both constituents.
    """

    group: Literal["S", "A"]
    label: Partition
    branch: Literal["+", "-"] | None = None

    def __post_init__(self):
        object.__setattr__(self, "label", Partition(self.label))
        sc = is_self_conjugate(self.label)
        if self.group == "S" and self.branch is not None:
            raise ValueError("branches only exist for alternating-group characters")
        if self.branch not in (None, "+", "-"):
            raise ValueError(f"branch must be '+', '-' or None, not {self.branch!r}")
        if self.group == "A" and not sc and self.branch is not None:
            raise ValueError(f"{tuple(self.label)} is not self-conjugate; it has no branches")

    def canonical(self) -> "CharacterId":
        """Representative label: the larger of ``lam`` and ``lam'`` for A_n."""
        if self.group == "A" and self.branch is None:
            return CharacterId("A", max(self.label, conjugate(self.label)))
        return self

    def __eq__(self, other):
        if not isinstance(other, CharacterId):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.group, tuple(a.label), a.branch) == (b.group, tuple(b.label), b.branch)

    def __hash__(self):
        c = self.canonical()
        return hash((c.group, tuple(c.label), c.branch))


def degree(lam: Sequence[int]) -> int:
    lam = tuple(lam)
    return factorial(sum(lam)) // prod(hook_lengths(lam))


@lru_cache(maxsize=1 << 18)
def rim_hook_removals(lam: tuple[int, ...], e: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """All ``(lam minus an e-rim-hook, leg length)`` pairs."""
    z = len(lam)
    beads = [lam[i] + z - 1 - i for i in range(z)]
    occupied = set(beads)
    out = []
    for k, x in enumerate(beads):
        y = x - e
        if y < 0 or y in occupied:
            continue
        # Beads are strictly decreasing, so the jumped beads are a contiguous run after k.
        leg = 0
        for x2 in beads[k + 1:]:
            if x2 <= y:
                break
            leg += 1
        moved = beads[:k] + beads[k + 1:k + 1 + leg] + [y] + beads[k + 1 + leg:]
        parts = tuple(b - (z - 1 - i) for i, b in enumerate(moved))
        out.append((tuple(p for p in parts if p > 0), leg))
    return tuple(out)


class CharacterSession:
    """Memoised Murnaghan-Nakayama evaluator.

    The cache maps ``(partition, remaining cycles)`` to a value and drops the
    oldest entries once ``cache_cap`` is exceeded.  A lock guards it, so one
    session may be shared between threads.
    """

    def __init__(self, cache_cap: int = DEFAULT_CACHE_CAP):
        if cache_cap < 1:
            raise ValueError("cache_cap must be positive")
        self.cache_cap = cache_cap
        self._cache: OrderedDict = OrderedDict()
        self._lock = threading.Lock()
        self.hits = 0
        self.misses = 0

    def __len__(self) -> int:
        return len(self._cache)

    def clear(self) -> None:
        with self._lock:
            self._cache.clear()

    def value(self, lam: Sequence[int], t: Sequence[int], order: str = "descending") -> int:
        lam, t = tuple(lam), tuple(t)
        if sum(lam) != sum(t):
            raise ValueError(f"size mismatch: |{lam}| = {sum(lam)} but |{t}| = {sum(t)}")
        if any(x <= 0 for x in t):
            raise ValueError(f"cycle lengths must be positive: {t}")
        if order not in ("descending", "ascending"):
            raise ValueError(f"unknown peel order {order!r}")
        cycles = tuple(sorted(t, reverse=order == "descending"))
        return self._mn(lam, cycles)

    def _mn(self, lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
        if not cycles:
            return 1
        key = (lam, cycles)
        with self._lock:
            hit = self._cache.get(key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        rest = cycles[1:]
        total = 0
        for mu, leg in rim_hook_removals(lam, cycles[0]):
            v = self._mn(mu, rest)
            total += -v if leg & 1 else v
        with self._lock:
            self._cache[key] = total
            while len(self._cache) > self.cache_cap:
                self._cache.popitem(last=False)
        return total

    def value_alt(self, c: CharacterId, t: Sequence[int]):
        if c.group != "A":
            raise ValueError("value_alt needs an alternating-group character")
        t = tuple(t)
        if not is_even_type(t):
            raise ValueError(f"cycle type {t} is odd; it does not lie in A_n")
        chi = self.value(c.label, t)
        if c.branch is None:
            return chi
        if is_split_class(t):
            return UNSUPPORTED_SPLIT_CLASS
        # On a non-split class both constituents take half the S_n value.
        return chi // 2


_default = CharacterSession()


def default_session() -> CharacterSession:
    return _default


def value(lam: Sequence[int], t: Sequence[int], session: CharacterSession | None = None) -> int:
    """chi^lam evaluated on the class of cycle type ``t``."""
    return (session or _default).value(lam, t)


def value_alt(c: CharacterId, t: Sequence[int], session: CharacterSession | None = None):
    """Value of an A_n character on an even cycle type.

    Returns ``UNSUPPORTED_SPLIT_CLASS`` for a self-conjugate label on a class
    that splits in A_n; those values are irrational in general and never
    needed for vanishing questions.
    """
    return (session or _default).value_alt(c, t)


def _reachability(mu: tuple[int, ...], e: int):
    target = sum(mu)
    memo: dict[tuple[int, ...], bool] = {}

    def reach(lam: tuple[int, ...]) -> bool:
        if lam == mu:
            return True
        if sum(lam) <= target:
            return False
        if lam not in memo:
            memo[lam] = any(reach(nu) for nu, _ in rim_hook_removals(lam, e))
        return memo[lam]

    return reach


def sign_between(lam: Sequence[int], mu: Sequence[int], e: int) -> int | None:
    """Sign of any path of e-hook removals from ``lam`` to ``mu``; None if there is none."""
    lam, mu = tuple(lam), tuple(mu)
    if (sum(lam) - sum(mu)) % e:
        return None
    reach = _reachability(mu, e)
    if not reach(lam):
        return None
    legs = 0
    while lam != mu:
        lam, leg = next((nu, leg) for nu, leg in rim_hook_removals(lam, e) if reach(nu))
        legs += leg
    return -1 if legs & 1 else 1


def path_count(lam: Sequence[int], mu: Sequence[int], e: int) -> int:
    """Number of distinct sequences of e-hook removals leading from ``lam`` to ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    target = sum(mu)
    memo: dict[tuple[int, ...], int] = {}

    def count(nu: tuple[int, ...]) -> int:
        if nu == mu:
            return 1
        if sum(nu) <= target:
            return 0
        if nu not in memo:
            memo[nu] = sum(count(x) for x, _ in rim_hook_removals(nu, e))
        return memo[nu]

    return count(lam)


def path_count_formula(lam: Sequence[int], e: int, component: int | None = None) -> int:
    """Closed-form path count from the e-quotient.

    With ``component=None`` this counts paths from ``lam`` to its e-core:
    a multinomial in the quotient sizes times the product of the quotient
    degrees.  With ``component=i`` it counts paths to the partition with the
    same core whose quotient is a single box in position ``i``.
    """
    cq = core_and_quotient(lam, e)
    sizes = [sum(q) for q in cq.quotient]
    degs = prod(degree(q) for q in cq.quotient)
    if component is None:
        return factorial(cq.weight) // prod(factorial(s) for s in sizes) * degs
    if sizes[component] == 0:
        return 0
    sizes[component] -= 1
    return factorial(cq.weight - 1) // prod(factorial(s) for s in sizes) * degs


def unit_quotient_partition(lam: Sequence[int], e: int, component: int) -> Partition:
    """Partition with the e-core of ``lam`` and quotient ``(1)`` in one position."""
    cq = core_and_quotient(lam, e)
    quot = [Partition()] * e
    quot[component] = Partition((1,))
    return from_core_and_quotient(cq.core, quot, e)
