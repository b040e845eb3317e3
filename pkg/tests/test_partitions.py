import pytest
from hypothesis import given

from conftest import partitions
from hookvan.partitions import (
    Partition,
    conjugate,
    format_partition,
    hook_lengths,
    hook_multiset,
    hooks_of_length,
    is_self_conjugate,
    parse_partition,
    partitions_of,
    remove_hook,
    staircase,
)
from oracles import conjugate_by_diagram, hook_lengths_by_counting, partition_count


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        Partition((-1,))


@pytest.mark.parametrize("text, parts", [
    ("6,3,3,2", (6, 3, 3, 2)),
    ("2^3,1", (2, 2, 2, 1)),
    ("1^4", (1, 1, 1, 1)),
    ("-", ()),
    ("()", ()),
    ("", ()),
    ("3, 1 ,2", (3, 2, 1)),
])
def test_parse(text, parts):
    assert parse_partition(text) == parts


@pytest.mark.parametrize("bad", ["a,b", "3,-1", "2^x", "0"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_partition(bad)


def test_format_empty_and_nonempty():
    assert format_partition(()) == "-"
    assert format_partition((4, 2, 1, 1)) == "4,2,1,1"


@given(partitions(0, 14))
def test_format_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam


@given(partitions(0, 14))
def test_conjugate_matches_diagram_transpose(lam):
    assert conjugate(lam) == conjugate_by_diagram(lam)
    assert conjugate(conjugate(lam)) == lam


@given(partitions(0, 12))
def test_hook_lengths_match_direct_count(lam):
    assert hook_lengths(lam) == hook_lengths_by_counting(lam)
    assert sum(hook_multiset(lam).values()) == sum(lam)


@pytest.mark.parametrize("n", range(0, 21))
def test_partition_counts(n):
    parts = partitions_of(n)
    assert len(parts) == len(set(parts)) == partition_count(n)
    assert all(sum(p) == n for p in parts)


def test_partitions_order():
    assert partitions_of(4) == ((4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1))


def test_staircase_is_self_conjugate():
    for r in range(6):
        assert staircase(r) == tuple(range(r, 0, -1))
        assert is_self_conjugate(staircase(r))


def test_remove_hook_example():
    mu, leg = remove_hook((9, 8, 6, 5, 1), (2, 3))
    assert mu == (9, 5, 4, 2, 1)
    assert leg == 2


def test_remove_hook_outside_diagram():
    with pytest.raises(ValueError):
        remove_hook((2, 1), (2, 2))
    with pytest.raises(ValueError):
        remove_hook((2, 1), (0, 1))


@given(partitions(1, 12))
def test_hook_removal_size_and_leg(lam):
    for h in hooks_of_length(lam, 1) + hooks_of_length(lam, 2) + hooks_of_length(lam, 3):
        mu, leg = remove_hook(lam, h.corner)
        assert sum(mu) == sum(lam) - h.length
        assert leg == h.leg
        assert h.arm + h.leg + 1 == h.length


def test_hooks_of_length_rejects_zero():
    with pytest.raises(ValueError):
        hooks_of_length((2, 1), 0)
