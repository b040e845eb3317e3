"""p-block data for S_n and A_n: block labels, defects and heights.

Everything is derived from prime-power weights of the labelling partition;
no big-integer degree is ever divided here.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .abacus import core_and_quotient, weight
from .partitions import Partition, format_partition, is_self_conjugate
from .sym_groups import GroupContext, is_prime, legendre, sylow_log_order

__all__ = [
    "BlockData",
    "prime_power_weights",
    "nu_p_degree",
    "block_data_sym",
    "block_data_alt",
    "same_block_sym",
]


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def prime_power_weights(lam: Sequence[int], p: int) -> dict[int, int]:
    """Map i -> w_{p^i}(lam) for every i >= 1 with p^i <= |lam|."""
    n = sum(lam)
    out = {}
    i, q = 1, p
    while q <= n:
        out[i] = weight(lam, q)
        i, q = i + 1, q * p
    return out


def nu_p_degree(lam: Sequence[int], p: int) -> int:
    """p-adic valuation of chi^lam(1), from Legendre's formula minus the p-power weights."""
    _check_prime(p)
    return legendre(sum(lam), p) - sum(prime_power_weights(lam, p).values())


@dataclass(frozen=True)
class BlockData:
    group: GroupContext
    p: int
    core: Partition
    weight: int
    defect: int
    sylow_log: int
    height: int
    nu_p_degree: int

    def to_dict(self) -> dict:
        return {
            "core": format_partition(self.core),
            "weight": self.weight,
            "defect": self.defect,
            "height": self.height,
            "nu_p_degree": self.nu_p_degree,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def block_data_sym(lam: Sequence[int], p: int) -> BlockData:
    _check_prime(p)
    lam = Partition(lam)
    n = lam.n
    cq = core_and_quotient(lam, p)
    ctx = GroupContext(max(n, 1), "S", p)
    a = legendre(n, p)
    d = legendre(p * cq.weight, p)
    nu = nu_p_degree(lam, p)
    h = d - sum(prime_power_weights(lam, p).values())
    assert a - d + h == nu
    return BlockData(ctx, p, cq.core, cq.weight, d, a, h, nu)


def block_data_alt(lam: Sequence[int], p: int) -> BlockData:
    """Block data of the A_n character(s) covered by chi^lam.

    For p = 2 the defect drops by one (clamped at 0), the Sylow order halves,
    and a self-conjugate label halves the degree.  The height comes from
    ``nu_p(eta(1)) = a - d + h``.
    """
    _check_prime(p)
    lam = Partition(lam)
    n = lam.n
    if n < 2:
        raise ValueError("A_n block data needs n >= 2")
    sym = block_data_sym(lam, p)
    if p != 2:
        return BlockData(GroupContext(n, "A", p), p, sym.core, sym.weight, sym.defect,
                         sym.sylow_log, sym.height, sym.nu_p_degree)
    ctx = GroupContext(n, "A", 2)
    a = sylow_log_order(ctx)
    d = max(legendre(2 * sym.weight, 2) - 1, 0)
    nu = sym.nu_p_degree - (1 if is_self_conjugate(lam) else 0)
    return BlockData(ctx, 2, sym.core, sym.weight, d, a, nu - a + d, nu)


def same_block_sym(lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    return core_and_quotient(lam, p).core == core_and_quotient(mu, p).core
