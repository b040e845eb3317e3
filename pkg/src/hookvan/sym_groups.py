"""Conjugacy-class combinatorics of S_n and A_n, keyed by cycle type."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Literal

from .partitions import Partition, partitions_of

__all__ = [
    "CycleType",
    "GroupContext",
    "parse_cycle_type",
    "cycle_types",
    "ppower_cycle_types",
    "is_even_type",
    "class_size",
    "centralizer_order",
    "legendre",
    "nu_p",
    "sylow_log_order",
    "is_split_class",
    "split_classes",
    "is_prime",
    "primes_up_to",
    "fixed_point_free_support",
]

GroupKind = Literal["S", "A"]


class CycleType(Partition):
    """Cycle lengths of a permutation, fixed points included as parts equal to 1."""

    __slots__ = ()


def parse_cycle_type(text: str) -> CycleType:
    return CycleType.parse(text)


@dataclass(frozen=True)
class GroupContext:
    n: int
    kind: GroupKind = "S"
    p: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.kind not in ("S", "A"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.p is not None and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_alt(self) -> bool:
        return self.kind == "A"

    def __str__(self) -> str:
        return f"{self.kind}{self.n}" + (f" p={self.p}" if self.p else "")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def cycle_types(n: int) -> tuple[CycleType, ...]:
    return tuple(CycleType(t) for t in partitions_of(n))


@lru_cache(maxsize=256)
def ppower_cycle_types(n: int, p: int) -> tuple[CycleType, ...]:
    """Cycle types of n all of whose parts are powers of p (1 included).

    These are the cycle types of the p-elements of S_n.  Ordered reverse
    lexicographically, so the identity type comes last.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    powers = [1]
    while powers[-1] * p <= n:
        powers.append(powers[-1] * p)
    powers.reverse()
    out: list[CycleType] = []

    def rec(remaining: int, start: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(CycleType(prefix))
            return
        for k in range(start, len(powers)):
            q = powers[k]
            if q <= remaining:
                prefix.append(q)
                rec(remaining - q, k, prefix)
                prefix.pop()

    rec(n, 0, [])
    return tuple(out)


def is_even_type(t: Iterable[int]) -> bool:
    """True iff permutations of this cycle type lie in A_n."""
    return sum(1 for x in t if x % 2 == 0) % 2 == 0


def centralizer_order(t: Iterable[int]) -> int:
    mult = Counter(t)
    return prod(k**m * factorial(m) for k, m in mult.items())


def class_size(t: Iterable[int]) -> int:
    t = tuple(t)
    return factorial(sum(t)) // centralizer_order(t)


def is_split_class(t: Iterable[int]) -> bool:
    """An S_n class splits in A_n iff its cycle lengths are odd and distinct."""
    t = tuple(t)
    return all(x % 2 for x in t) and len(set(t)) == len(t)


def split_classes(n: int):
    """Predicate deciding which cycle types of n split into two A_n classes."""
    def predicate(t: Iterable[int]) -> bool:
        t = tuple(t)
        if sum(t) != n:
            raise ValueError(f"cycle type {t} is not a type of {n}")
        return is_split_class(t)
    return predicate


def legendre(n: int, p: int) -> int:
    """nu_p(n!) via the base-p digit sum."""
    s, m = 0, n
    while m:
        s += m % p
        m //= p
    return (n - s) // (p - 1)


def nu_p(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero is undefined")
    x, v = abs(x), 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def sylow_log_order(ctx: GroupContext, p: int | None = None) -> int:
    """Exponent a with p**a the order of a Sylow p-subgroup of the group."""
    p = p if p is not None else ctx.p
    if p is None:
        raise ValueError("no prime given")
    a = legendre(ctx.n, p)
    if ctx.is_alt and p == 2 and ctx.n >= 2:
        a -= 1
    return a


def fixed_point_free_support(t: Iterable[int]) -> int:
    """Number of points moved by a permutation of cycle type t."""
    return sum(x for x in t if x > 1)
