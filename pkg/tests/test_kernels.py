import subprocess
import sys

import numpy as np
import pytest

from hookvan import kernels
from hookvan.characters import value
from hookvan.partitions import partitions_of
from hookvan.sym_groups import cycle_types, ppower_cycle_types

BACKENDS = [False] + ([True] if kernels.HAVE_NUMBA else [])


@pytest.mark.parametrize("use_numba", BACKENDS)
@pytest.mark.parametrize("n", [1, 2, 5, 8])
def test_full_table_matches_exact_engine(n, use_numba):
    types = cycle_types(n)
    parts, table = kernels.character_table(n, types, use_numba)
    assert parts == partitions_of(n)
    expected = np.array([[value(lam, t) for t in types] for lam in parts], dtype=np.int64)
    np.testing.assert_array_equal(table, expected)


@pytest.mark.skipif(not kernels.HAVE_NUMBA, reason="numba not installed")
@pytest.mark.parametrize("n, p", [(14, 2), (13, 3), (20, 2)])
def test_backends_agree(n, p):
    types = ppower_cycle_types(n, p)
    _, a = kernels.character_table(n, types, use_numba=True)
    _, b = kernels.character_table(n, types, use_numba=False)
    np.testing.assert_array_equal(a, b)


def test_identity_column_is_degrees():
    from hookvan.characters import degree
    parts, table = kernels.character_table(12, [(1,) * 12])
    assert [int(x) for x in table[:, 0]] == [degree(lam) for lam in parts]


def test_bounds_and_bad_types():
    with pytest.raises(ValueError):
        kernels.character_column(kernels.MAX_N + 1, (1,) * (kernels.MAX_N + 1))
    with pytest.raises(ValueError):
        kernels.character_column(4, (2, 1))
    with pytest.raises(ValueError):
        kernels.character_column(4, (4, 0))


def test_mask_encoding():
    assert kernels.mask_of((), 3) == 0b111
    assert kernels.mask_of((2,), 2) == 0b1001
    masks = kernels.partition_masks(6, 6)
    assert masks.dtype == np.uint64 and len(masks) == 11 and np.all(np.diff(masks.astype(np.int64)) > 0)


def test_env_flag_disables_numba():
    code = "from hookvan import kernels; print(kernels.numba_enabled())"
    out = subprocess.run([sys.executable, "-c", code], env={"HOOKVAN_DISABLE_NUMBA": "1", "PATH": ""},
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
