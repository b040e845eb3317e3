"""James abacus: e-cores, e-quotients, e-weights and e-core towers.

Quotients always use an abacus whose bead count is the smallest multiple of
``e`` that is at least the number of parts.  With this convention the
quotient of ``(5,3,3,3,1)`` at ``e = 2`` is ``((2,1), (2,2))``, and conjugating
a partition conjugates and reverses its quotient.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

from .partitions import Partition, hook_lengths, parse_partition, format_partition

__all__ = [
    "BetaSet",
    "CoreQuotient",
    "CoreTower",
    "core_and_quotient",
    "core",
    "quotient",
    "is_core",
    "from_core_and_quotient",
    "weight",
    "weight_by_hooks",
    "core_tower",
    "tower_to_partition",
    "iterated_identity_check",
]


def _check_e(e: int) -> None:
    if e < 2:
        raise ValueError(f"abacus requires e >= 2, got {e}")


@dataclass(frozen=True)
class BetaSet:
    """First-column hook lengths ``beta_i = lambda_i + (bead_count - i)``."""

    beads: tuple[int, ...]

    @property
    def bead_count(self) -> int:
        return len(self.beads)

    @classmethod
    def from_partition(cls, lam: Sequence[int], bead_count: int) -> "BetaSet":
        if bead_count < len(lam):
            raise ValueError("bead count smaller than number of parts")
        padded = tuple(lam) + (0,) * (bead_count - len(lam))
        return cls(tuple(x + bead_count - 1 - i for i, x in enumerate(padded)))

    def to_partition(self) -> Partition:
        return _from_beads(self.beads)


def _from_beads(beads: Iterable[int]) -> Partition:
    beads = sorted(beads, reverse=True)
    b = len(beads)
    return Partition(x for x in (beads[i] - (b - 1 - i) for i in range(b)) if x > 0)


def _bead_count(num_parts: int, e: int) -> int:
    return -(-num_parts // e) * e


class CoreQuotient(NamedTuple):
    core: Partition
    quotient: tuple[Partition, ...]
    e: int
    weight: int


@lru_cache(maxsize=1 << 16)
def _core_quotient(lam: tuple[int, ...], e: int) -> CoreQuotient:
    beads = BetaSet.from_partition(lam, _bead_count(len(lam), e)).beads
    quot = []
    core_beads = []
    for r in range(e):
        levels = [(x - r) // e for x in beads if x % e == r]
        quot.append(_from_beads(levels))
        core_beads.extend(r + e * k for k in range(len(levels)))
    quot = tuple(quot)
    return CoreQuotient(_from_beads(core_beads), quot, e, sum(sum(q) for q in quot))


def core_and_quotient(lam: Sequence[int], e: int) -> CoreQuotient:
    _check_e(e)
    return _core_quotient(tuple(lam), e)


def core(lam: Sequence[int], e: int) -> Partition:
    return core_and_quotient(lam, e).core


def quotient(lam: Sequence[int], e: int) -> tuple[Partition, ...]:
    return core_and_quotient(lam, e).quotient


def weight(lam: Sequence[int], e: int) -> int:
    """The e-weight, read off as the total size of the e-quotient."""
    return core_and_quotient(lam, e).weight


def weight_by_hooks(lam: Sequence[int], e: int) -> int:
    """The e-weight counted directly as hooks of length divisible by ``e``."""
    _check_e(e)
    return sum(1 for h in hook_lengths(lam) if h % e == 0)


def is_core(lam: Sequence[int], e: int) -> bool:
    return weight(lam, e) == 0


def from_core_and_quotient(core_: Sequence[int], quot: Sequence[Sequence[int]], e: int) -> Partition:
    """Rebuild the partition with the given e-core and e-quotient."""
    _check_e(e)
    if len(quot) != e:
        raise ValueError(f"quotient must have exactly {e} components")
    if not is_core(core_, e):
        raise ValueError(f"{tuple(core_)} is not a {e}-core")
    quot = [tuple(Partition(q)) for q in quot]
    b = _bead_count(len(core_), e)
    while True:
        beads = BetaSet.from_partition(core_, b).beads
        counts = [sum(1 for x in beads if x % e == r) for r in range(e)]
        if all(c >= len(q) for c, q in zip(counts, quot)):
            break
        b += e
    out = []
    for r, (c, q) in enumerate(zip(counts, quot)):
        padded = q + (0,) * (c - len(q))
        out.extend(r + e * (x + c - 1 - i) for i, x in enumerate(padded))
    return _from_beads(out)


@dataclass(frozen=True)
class CoreTower:
    """Sparse e-core tower; layer ``k`` is an ``e**k``-tuple of e-cores.

    Layers after the last stored one are implicitly empty.  Layer 0 is always
    stored.
    """

    e: int
    layers: tuple[tuple[Partition, ...], ...]

    def __post_init__(self):
        _check_e(self.e)
        for k, layer in enumerate(self.layers):
            if len(layer) != self.e**k:
                raise ValueError(f"layer {k} must have {self.e ** k} entries, got {len(layer)}")

    @property
    def height(self) -> int:
        return len(self.layers)

    def layer(self, k: int) -> tuple[Partition, ...]:
        if k < len(self.layers):
            return self.layers[k]
        return (Partition(),) * self.e**k

    def layer_sizes(self) -> list[int]:
        return [sum(sum(x) for x in layer) for layer in self.layers]

    @property
    def n(self) -> int:
        return sum(s * self.e**k for k, s in enumerate(self.layer_sizes()))

    def to_json(self) -> str:
        return json.dumps(
            {"e": self.e, "layers": [[format_partition(x) for x in layer] for layer in self.layers]}
        )

    @classmethod
    def from_json(cls, text: str) -> "CoreTower":
        data = json.loads(text)
        layers = tuple(tuple(parse_partition(s) for s in layer) for layer in data["layers"])
        return cls(int(data["e"]), layers)

    @classmethod
    def from_layers(cls, e: int, layers: Iterable[Iterable[Sequence[int]]]) -> "CoreTower":
        layers = [tuple(Partition(x) for x in layer) for layer in layers]
        while len(layers) > 1 and not any(layers[-1]):
            layers.pop()
        return cls(e, tuple(layers))


def core_tower(lam: Sequence[int], e: int) -> CoreTower:
    _check_e(e)
    cq = core_and_quotient(lam, e)
    layers = [(cq.core,)]
    current = cq.quotient
    while any(current):
        pieces = [core_and_quotient(x, e) for x in current]
        layers.append(tuple(c.core for c in pieces))
        current = tuple(q for c in pieces for q in c.quotient)
    return CoreTower(e, tuple(layers))


def tower_to_partition(t: CoreTower) -> Partition:
    e = t.e
    for layer in t.layers:
        for x in layer:
            if not is_core(x, e):
                raise ValueError(f"tower entry {tuple(x)} is not a {e}-core")
    below = t.layer(t.height)
    for k in range(t.height - 1, -1, -1):
        layer = t.layers[k]
        below = tuple(
            from_core_and_quotient(c, below[j * e:(j + 1) * e], e) for j, c in enumerate(layer)
        )
    return below[0]


def _quotient_tuple(parts: Sequence[Sequence[int]], r: int) -> tuple[Partition, ...]:
    return tuple(q for x in parts for q in quotient(x, r))


def iterated_identity_check(lam: Sequence[int], e: int, r: int) -> bool:
    """Check ``C_r(Q_e(lam)) == Q_e(C_{er}(lam))`` and ``|Q_r(Q_e(lam))| == |Q_{er}(lam)|``."""
    qe = quotient(lam, e)
    first = tuple(core(x, r) for x in qe) == quotient(core(lam, e * r), e)
    second = sum(map(sum, _quotient_tuple(qe, r))) == weight(lam, e * r)
    return first and second
