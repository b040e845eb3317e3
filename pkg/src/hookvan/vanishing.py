"""Vanishing profiles on Sylow subgroups and what they determine.

A profile records, for a fixed group (S_n or A_n) and prime p, the p-power
cycle types on which a character vanishes.  For A_n only even types are
considered.  From a profile we recover the p-power weights of the labelling
partition (exactly for S_n, up to one off-by-one error for A_n at p = 2) and
from those the p-part of the degree, the block defect and the p-height.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import isqrt
from typing import Iterable, Literal, Sequence

from . import kernels
from .characters import CharacterSession, default_session
from .partitions import Partition, conjugate, format_partition
from .sym_groups import (
    CycleType,
    GroupContext,
    fixed_point_free_support,
    is_even_type,
    legendre,
    parse_cycle_type,
    ppower_cycle_types,
    primes_up_to,
)

__all__ = [
    "VanishingProfile",
    "WeightEstimates",
    "AltDataReport",
    "ProfileComparison",
    "universe_types",
    "profile_sym",
    "profile_alt",
    "profiles_for_all",
    "van_pow",
    "recover_weights_sym",
    "estimate_weights_alt",
    "determine_alt_data",
    "compare_profiles",
    "compare_sets",
    "linear_twist_equivalent",
    "restrict_to_defect_group",
    "is_triangular",
]


def universe_types(ctx: GroupContext) -> tuple[CycleType, ...]:
    if ctx.p is None:
        raise ValueError("a vanishing profile needs a prime")
    types = ppower_cycle_types(ctx.n, ctx.p)
    if ctx.is_alt:
        types = tuple(t for t in types if is_even_type(t))
    return types


@dataclass(frozen=True)
class VanishingProfile:
    ctx: GroupContext
    zero_types: frozenset
    universe_size: int
    support_bound: int | None = None  # set when restricted to a defect group

    def __post_init__(self):
        if CycleType((1,) * self.ctx.n) in self.zero_types:
            raise ValueError("no character vanishes at the identity")

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def p(self) -> int:
        return self.ctx.p

    def universe(self) -> tuple[CycleType, ...]:
        types = universe_types(self.ctx)
        if self.support_bound is not None:
            types = tuple(t for t in types if fixed_point_free_support(t) <= self.support_bound)
        return types

    def nonvanishing(self) -> tuple[CycleType, ...]:
        return tuple(t for t in self.universe() if t not in self.zero_types)

    def to_dict(self) -> dict:
        d = {
            "n": self.ctx.n,
            "group": self.ctx.kind,
            "p": self.ctx.p,
            "zeros": sorted((format_partition(t) for t in self.zero_types), key=_type_key),
            "universe": self.universe_size,
        }
        if self.support_bound is not None:
            d["support_bound"] = self.support_bound
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "VanishingProfile":
        ctx = GroupContext(int(data["n"]), data["group"], int(data["p"]))
        zeros = frozenset(parse_cycle_type(s) for s in data["zeros"])
        bound = data.get("support_bound")
        return cls(ctx, zeros, int(data["universe"]), None if bound is None else int(bound))

    @classmethod
    def from_json(cls, text: str) -> "VanishingProfile":
        return cls.from_dict(json.loads(text))


def _type_key(s: str):
    return [-int(x) for x in s.split(",")] if s != "-" else []


def _profile(lam: Partition, ctx: GroupContext, session: CharacterSession | None) -> VanishingProfile:
    session = session or default_session()
    universe = universe_types(ctx)
    zeros = frozenset(t for t in universe if session.value(lam, t) == 0)
    return VanishingProfile(ctx, zeros, len(universe))


def profile_sym(lam: Sequence[int], p: int, session: CharacterSession | None = None) -> VanishingProfile:
    lam = Partition(lam)
    return _profile(lam, GroupContext(lam.n, "S", p), session)


def profile_alt(lam: Sequence[int], p: int, session: CharacterSession | None = None) -> VanishingProfile:
    """Profile of the A_n character(s) covered by chi^lam.

    A character of A_n vanishes exactly where a covering S_n character does,
    so both constituents of a self-conjugate label share this profile.
    """
    lam = Partition(lam)
    if lam.n < 2:
        raise ValueError("A_n profiles need n >= 2")
    return _profile(lam, GroupContext(lam.n, "A", p), session)


def profiles_for_all(n: int, p: int, kind: Literal["S", "A"] = "S",
                     use_numba: bool | None = None) -> dict[Partition, VanishingProfile]:
    """Profiles of every partition of n at once, via the batched kernel."""
    ctx = GroupContext(n, kind, p)
    universe = universe_types(ctx)
    if n <= kernels.MAX_N:
        parts, table = kernels.character_table(n, universe, use_numba)
        zero = table == 0
        return {
            lam: VanishingProfile(ctx, frozenset(t for k, t in enumerate(universe) if zero[i, k]),
                                  len(universe))
            for i, lam in enumerate(parts)
        }
    from .partitions import partitions_of
    return {lam: _profile(lam, ctx, None) for lam in partitions_of(n)}


def van_pow(lam: Sequence[int], group: Literal["S", "A"] = "S",
            session: CharacterSession | None = None) -> frozenset:
    """All vanishing prime-power-order cycle types, over every prime q <= n."""
    lam = Partition(lam)
    session = session or default_session()
    out: set = set()
    for q in primes_up_to(lam.n):
        ctx = GroupContext(lam.n, group, q)
        out.update(t for t in universe_types(ctx) if session.value(lam, t) == 0)
    return frozenset(out)


def _e_power_type(n: int, e: int, w: int) -> CycleType:
    return CycleType((e,) * w + (1,) * (n - e * w))


def recover_weights_sym(prof: VanishingProfile) -> dict[int, int]:
    """Read the p-power weights of the labelling partition off an S_n profile.

    ``w_{p^i}`` is the largest w such that the character is non-zero on w
    disjoint p^i-cycles.
    """
    if prof.ctx.is_alt:
        raise ValueError("weight recovery from a profile needs an S_n context; use estimate_weights_alt")
    n, p = prof.n, prof.p
    out = {}
    i, q = 1, p
    while q <= n:
        out[i] = max(w for w in range(n // q + 1) if _e_power_type(n, q, w) not in prof.zero_types)
        i, q = i + 1, q * p
    return out


def is_triangular(x: int) -> bool:
    return x >= 0 and isqrt(8 * x + 1) ** 2 == 8 * x + 1


@dataclass(frozen=True)
class WeightEstimates:
    n: int
    w_hat0: dict
    w_hat: dict
    nu_hat: int
    d_hat: int
    h_hat: int
    m: int
    improved: bool = True

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "w_hat0": {str(2**i): w for i, w in self.w_hat0.items()},
            "w_hat": {str(2**i): w for i, w in self.w_hat.items()},
            "nu_hat": self.nu_hat,
            "d_hat": self.d_hat,
            "h_hat": self.h_hat,
            "m": self.m,
            "improved": self.improved,
        }


def estimate_weights_alt(prof: VanishingProfile, improved: bool = True) -> WeightEstimates:
    """Estimate the 2-power weights from an A_n profile at p = 2.

    ``w_hat0[i]`` maximises ``sum_{j>=i} 2**(j-i) * b_j`` over the non-vanishing
    even 2-power types with ``b_j`` cycles of length ``2**j``.  With
    ``improved`` the i = 1 estimate is bumped by one when ``n - 2*w_hat0[1]``
    is not triangular, since 2-cores have triangular size.
    """
    if not prof.ctx.is_alt or prof.p != 2:
        raise ValueError("estimate_weights_alt needs an A_n profile at p = 2")
    n = prof.n
    if n < 2:
        raise ValueError("n must be at least 2")
    live = prof.nonvanishing()
    w0 = {}
    i = 1
    while 2**i <= n:
        w0[i] = max(sum(x >> i for x in t if x >= 2**i) for t in live)
        i += 1
    w = dict(w0)
    if improved and 1 in w and not is_triangular(n - 2 * w0[1]):
        w[1] += 1
    m = bin(n).count("1")
    nu = n - m - sum(w.values())
    d = max(legendre(2 * w.get(1, 0), 2) - 1, 0)
    h = nu + d - (n - m - 1)
    return WeightEstimates(n, w0, w, nu, d, h, m, improved)


@dataclass(frozen=True)
class AltDataReport:
    """Candidate 2-part of degree, defect and height; one-element tuples are pinned."""

    degree_2part: tuple[int, ...]
    defect: tuple[int, ...]
    height: tuple[int, ...]
    reasons: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "degree_2part": list(self.degree_2part),
            "defect": list(self.defect),
            "height": list(self.height),
            "pinned_because": list(self.reasons),
        }


def determine_alt_data(est: WeightEstimates, n: int | None = None) -> AltDataReport:
    """Two-option determination of eta(1)_2, the block defect and the 2-height.

    The first option of each pair is the estimate itself, the second the
    alternative that a single off-by-one weight or a self-conjugate label
    would produce.  An option is dropped when the profile rules it out.
    """
    n = est.n if n is None else n
    if n < 2:
        raise ValueError("n must be at least 2")
    w2 = est.w_hat.get(1, 0)
    deg = [2**est.nu_hat, 2 ** (est.nu_hat - 1)] if est.nu_hat > 0 else [1]
    defect = [est.d_hat, est.d_hat + 1]
    height = [est.h_hat, est.h_hat - 1]
    reasons = []
    if w2 > 0 and any(w % 2 for w in est.w_hat.values()):
        reasons.append("odd weight estimate")
        deg, defect, height = deg[:1], defect[:1], height[:1]
    if w2 == 0:
        reasons.append("w_hat_2 = 0")
        defect = defect[:1]
    elif est.improved and (n - 2 * w2 != 3 or n % 4 != 3):
        reasons.append("n - 2*w_hat_2 != 3 or n != 3 mod 4")
        defect = defect[:1]
    if est.nu_hat == 0:
        reasons.append("nu_hat = 0")
    if est.h_hat <= 0:
        reasons.append("h_hat = 0")
        height = height[:1]
    return AltDataReport(tuple(deg), tuple(defect), tuple(height), tuple(dict.fromkeys(reasons)))


@dataclass(frozen=True)
class ProfileComparison:
    relation: Literal["equal", "subset", "superset", "incomparable"]
    ctx: GroupContext

    @property
    def slack(self) -> int:
        """Allowed excess of the first valuation over the second under containment."""
        return 1 if self.ctx.is_alt and self.ctx.p == 2 else 0

    @property
    def mandated(self) -> str:
        s = " + 1" if self.slack else ""
        return {
            "equal": f"|nu(a) - nu(b)| <= {self.slack}",
            "subset": f"nu(a) <= nu(b){s}",
            "superset": f"nu(b) <= nu(a){s}",
            "incomparable": "nothing",
        }[self.relation]

    def holds(self, nu_a: int, nu_b: int) -> bool:
        """Check the inequality forced by the containment against given valuations."""
        ok = True
        if self.relation in ("equal", "subset"):
            ok &= nu_a <= nu_b + self.slack
        if self.relation in ("equal", "superset"):
            ok &= nu_b <= nu_a + self.slack
        return ok


def compare_sets(a: frozenset, b: frozenset) -> str:
    if a == b:
        return "equal"
    if a < b:
        return "subset"
    if a > b:
        return "superset"
    return "incomparable"


def compare_profiles(a: VanishingProfile, b: VanishingProfile) -> ProfileComparison:
    if a.ctx != b.ctx:
        raise ValueError(f"profiles live in different contexts: {a.ctx} vs {b.ctx}")
    return ProfileComparison(compare_sets(a.zero_types, b.zero_types), a.ctx)


def linear_twist_equivalent(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff chi^mu is chi^lam times the trivial or the sign character."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError("partitions of different sizes")
    return mu == lam or mu == conjugate(lam)


def restrict_to_defect_group(prof: VanishingProfile, block_weight: int) -> VanishingProfile:
    """Keep only types that fit in a defect group, i.e. move at most p * weight points."""
    bound = prof.p * block_weight
    if prof.support_bound is not None:
        bound = min(bound, prof.support_bound)
    keep = {t for t in prof.universe() if fixed_point_free_support(t) <= bound}
    return VanishingProfile(prof.ctx, prof.zero_types & keep, len(keep), bound)


