"""Integer partitions and Young-diagram geometry.

Partitions are immutable tuples of weakly decreasing positive integers.  Nodes
use 1-based (row, column) coordinates, matching the usual English convention
for Young diagrams.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "Partition",
    "Node",
    "Hook",
    "conjugate",
    "hook_multiset",
    "hook_lengths",
    "hooks_of_length",
    "remove_hook",
    "is_self_conjugate",
    "partitions_of",
    "parse_partition",
    "format_partition",
    "staircase",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The empty tuple is the unique partition of 0.  Instances compare and hash
    exactly like the underlying tuple, so they are safe as cache keys.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for k, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"partition parts must be positive: {parts!r}")
            if k and x > parts[k - 1]:
                raise ValueError(f"partition parts must be weakly decreasing: {parts!r}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    @classmethod
    def parse(cls, text: str):
        return cls(_parse_parts(text))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


class Node(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Hook:
    corner: Node
    length: int
    leg: int

    @property
    def arm(self) -> int:
        return self.length - self.leg - 1


def _parse_parts(text: str) -> list[int]:
    text = text.strip()
    if text in ("-", "", "()", "∅"):
        return []
    parts: list[int] = []
    for token in text.replace(" ", "").strip("()").split(","):
        if not token:
            raise ValueError(f"empty component in {text!r}")
        if "^" in token:
            base, _, exp = token.partition("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(token))
    return sorted(parts, reverse=True)


def parse_partition(text: str) -> Partition:
    """Parse ``"6,3,3,2"``, exponent form ``"2^3,1^2"`` or ``"-"`` for the empty partition.

    Parts may be given in any order; they are sorted into canonical form.
    Zero parts are rejected.
    """
    return Partition(_parse_parts(text))


def format_partition(lam: Iterable[int]) -> str:
    lam = tuple(lam)
    return ",".join(map(str, lam)) if lam else "-"


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))


def is_self_conjugate(lam: Iterable[int]) -> bool:
    lam = tuple(lam)
    return lam == tuple(conjugate(lam))


def _hook_grid(lam: tuple[int, ...]) -> Iterator[Hook]:
    conj = conjugate(lam)
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            leg = conj[j - 1] - i
            yield Hook(Node(i, j), (row - j) + leg + 1, leg)


def hook_lengths(lam: Iterable[int]) -> list[int]:
    """Hook lengths of all nodes, in row-major order."""
    return [h.length for h in _hook_grid(tuple(lam))]


def hook_multiset(lam: Iterable[int]) -> Counter:
    return Counter(hook_lengths(lam))


def hooks_of_length(lam: Iterable[int], e: int) -> list[Hook]:
    """All hooks of length exactly ``e``, ordered row-major by corner."""
    if e < 1:
        raise ValueError("hook length must be positive")
    return [h for h in _hook_grid(tuple(lam)) if h.length == e]


def remove_hook(lam: Iterable[int], corner: tuple[int, int]) -> tuple[Partition, int]:
    """Remove the hook with the given corner node and slide the rest north-west.

    Returns the new partition together with the leg length of the removed hook.
    """
    lam = tuple(lam)
    i, j = corner
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"node {tuple(corner)} is not in the diagram of {lam}")
    conj = conjugate(lam)
    leg = conj[j - 1] - i
    length = lam[i - 1] - j + leg + 1
    # On beta numbers a hook removal moves the bead of row i down by its length.
    z = len(lam)
    beads = [lam[r] + z - 1 - r for r in range(z)]
    beads[i - 1] -= length
    beads.sort(reverse=True)
    parts = [beads[r] - (z - 1 - r) for r in range(z)]
    return Partition(x for x in parts if x > 0), leg


@lru_cache(maxsize=64)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n`` in reverse lexicographic order, starting with ``(n)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _partitions_cached(n)


def staircase(r: int) -> Partition:
    """The staircase ``(r, r-1, ..., 1)``; these are exactly the 2-cores."""
    return Partition(range(r, 0, -1))
