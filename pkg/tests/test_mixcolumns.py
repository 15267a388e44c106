import numpy as np
import pytest

from aesmix.errors import BackendInitError
from aesmix.gf256 import generate_table
from aesmix.mixcolumns import (
    DEFAULT_ARCH,
    FORWARD_MATRIX,
    INVERSE_MATRIX,
    Arch,
    MixBackend,
    get_backend,
    inv_mix_column,
    mix_column,
    mix_columns,
)
from oracles import matrix_column

FIG6_IN = [0xD4, 0xBF, 0x5D, 0x30]
FIG6_OUT = [0x04, 0x66, 0x81, 0xE5]


def test_reference_column_is_oracle_value():
    # Guard against a silently wrong frozen constant.
    assert matrix_column(FORWARD_MATRIX, FIG6_IN) == FIG6_OUT
    assert matrix_column(INVERSE_MATRIX, FIG6_OUT) == FIG6_IN


@pytest.mark.parametrize(
    "col, expected",
    [
        (FIG6_IN, FIG6_OUT),
        ([0, 0, 0, 0], [0, 0, 0, 0]),
        ([0xAA] * 4, [0xAA] * 4),
    ],
)
def test_mix_column_examples(backend, col, expected):
    assert mix_column(col, backend) == expected


@pytest.mark.parametrize(
    "col, expected",
    [
        (FIG6_OUT, FIG6_IN),
        ([0, 0, 0, 0], [0, 0, 0, 0]),
        ([0xAA] * 4, [0xAA] * 4),
    ],
)
def test_inv_mix_column_examples(backend, col, expected):
    assert inv_mix_column(col, backend) == expected


def test_mix_columns_single_column(backend):
    s = np.zeros((4, 4), dtype=np.uint8)
    s[:, 0] = FIG6_IN
    out = mix_columns(s, backend)
    assert out[:, 0].tolist() == FIG6_OUT
    assert (out[:, 1:] == 0).all()
    assert (mix_columns(np.zeros((4, 4), np.uint8), backend) == 0).all()


def _random_columns(n, seed):
    return np.random.default_rng(seed).integers(0, 256, size=(n, 4), dtype=np.uint8)


def test_backends_agree_with_oracle_on_random_columns(backends):
    cols = _random_columns(10_000, 1)
    fwd = [mix_column(cols, b) for b in backends]
    inv = [inv_mix_column(cols, b) for b in backends]
    for out in fwd[1:]:
        assert (out == fwd[0]).all()
    for out in inv[1:]:
        assert (out == inv[0]).all()
    # The oracle is scalar and slow; check it on a slice.
    for i in range(0, 10_000, 25):
        col = cols[i].tolist()
        assert fwd[0][i].tolist() == matrix_column(FORWARD_MATRIX, col)
        assert inv[0][i].tolist() == matrix_column(INVERSE_MATRIX, col)


def test_involution_random_columns(backend):
    cols = _random_columns(10_000, 2)
    assert (inv_mix_column(mix_column(cols, backend), backend) == cols).all()
    assert (mix_column(inv_mix_column(cols, backend), backend) == cols).all()


def test_linearity(backend):
    a = _random_columns(2000, 3)
    b = _random_columns(2000, 4)
    assert (mix_column(a ^ b, backend) == mix_column(a, backend) ^ mix_column(b, backend)).all()


def test_column_permutation_commutes(backend):
    rng = np.random.default_rng(5)
    s = rng.integers(0, 256, size=(4, 4), dtype=np.uint8)
    perm = [2, 0, 3, 1]
    assert (mix_columns(s[:, perm], backend) == mix_columns(s, backend)[:, perm]).all()


def test_constant_columns_fixed(backend):
    cols = np.repeat(np.arange(256, dtype=np.uint8)[:, None], 4, axis=1)
    assert (mix_column(cols, backend) == cols).all()
    assert (inv_mix_column(cols, backend) == cols).all()


def test_state_roundtrip_batched(backend):
    s = np.random.default_rng(6).integers(0, 256, size=(64, 4, 4), dtype=np.uint8)
    fwd = mix_columns(s, backend)
    assert (mix_columns(fwd, backend, inverse=True) == s).all()


def test_default_is_xtime():
    assert DEFAULT_ARCH is Arch.XTIME
    assert get_backend().arch is Arch.XTIME
    assert mix_column(FIG6_IN) == FIG6_OUT


def test_table_footprints():
    assert get_backend("bitwise").table_bytes == 0
    assert get_backend("table").table_bytes == 1536
    assert get_backend("xtime").table_bytes == 0


def test_table_backend_rejects_missing_tables():
    with pytest.raises(BackendInitError):
        MixBackend(Arch.TABLE, tables={})
    partial = {c: generate_table(c) for c in (0x02, 0x03)}
    with pytest.raises(BackendInitError):
        MixBackend(Arch.TABLE, tables=partial)


def test_table_backend_rejects_wrong_tables():
    from aesmix.gf256 import MulTable

    tables = {c: generate_table(c) for c in (0x02, 0x03, 0x09, 0x0B, 0x0D, 0x0E)}
    bad = bytearray(tables[0x02].entries)
    bad[0x88] = 0x1B  # the misprint in the published table
    tables[0x02] = MulTable(0x02, bytes(bad))
    with pytest.raises(BackendInitError):
        MixBackend(Arch.TABLE, tables=tables)


def test_non_table_backend_takes_no_tables():
    with pytest.raises(BackendInitError):
        MixBackend(Arch.XTIME, tables={})


def test_column_length_checked():
    with pytest.raises(ValueError):
        mix_column([1, 2, 3])
