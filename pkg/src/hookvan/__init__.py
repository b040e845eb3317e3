"""Exact character theory of S_n and A_n for studying vanishing on Sylow subgroups."""
from .abacus import CoreTower, core, core_and_quotient, core_tower, quotient, tower_to_partition, weight
from .blocks import BlockData, block_data_alt, block_data_sym, nu_p_degree, prime_power_weights
from .characters import (
    UNSUPPORTED_SPLIT_CLASS,
    CharacterId,
    CharacterSession,
    degree,
    path_count,
    sign_between,
    value,
    value_alt,
)
from .partitions import Partition, conjugate, format_partition, parse_partition, partitions_of
from .sym_groups import CycleType, GroupContext, parse_cycle_type
from .vanishing import (
    VanishingProfile,
    compare_profiles,
    determine_alt_data,
    estimate_weights_alt,
    profile_alt,
    profile_sym,
    recover_weights_sym,
    van_pow,
)

__version__ = "0.1.0"
