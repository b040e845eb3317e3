import os

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hookvan.partitions import partitions_of

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def partitions(min_n: int = 0, max_n: int = 12):
    return st.integers(min_n, max_n).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def partition_pairs(min_n: int = 1, max_n: int = 10):
    """Two partitions of the same size."""
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n))))
