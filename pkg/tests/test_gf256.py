import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from aesmix import gf256
from aesmix.errors import DomainError
from aesmix.gf256 import (
    MUL_CONSTANTS,
    generate_table,
    gmul_oracle,
    mul_const_bitwise,
    mul_const_table,
    mul_const_xtime,
    xtime,
)
from oracles import peasant_mul

MULTIPLIERS = [mul_const_bitwise, mul_const_table, mul_const_xtime]


@pytest.mark.parametrize(
    "b, expected",
    [(0xAE, 0x47), (0x00, 0x00), (0x80, 0x1B), (0xD4, 0xB3)],
)
def test_xtime_examples(b, expected):
    assert xtime(b) == expected


def test_xtime_worked_binary_example():
    assert xtime(0b10101110) == 0b01000111


def test_xtime_matches_oracle_everywhere():
    assert all(xtime(b) == gmul_oracle(0x02, b) for b in range(256))


@pytest.mark.parametrize(
    "a, b, expected", [(0x02, 0xD4, 0xB3), (0x01, 0x5D, 0x5D), (0x03, 0xBF, 0xDA)]
)
def test_oracle_examples(a, b, expected):
    assert gmul_oracle(a, b) == expected


def test_oracle_agrees_with_second_oracle():
    # Two independently written multipliers over the full 256 x 256 domain.
    for a in range(256):
        for b in range(256):
            assert gmul_oracle(a, b) == peasant_mul(a, b)


def test_oracle_commutative_with_identity():
    for a in range(256):
        assert gmul_oracle(a, 1) == a
        for b in range(a, 256):
            assert gmul_oracle(a, b) == gmul_oracle(b, a)


@settings(max_examples=300)
@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_oracle_distributes_over_xor(a, b, c):
    assert gmul_oracle(a, b ^ c) == gmul_oracle(a, b) ^ gmul_oracle(a, c)


@pytest.mark.parametrize(
    "fn, c, b, expected",
    [
        (mul_const_bitwise, 0x0E, 0x01, 0x0E),
        (mul_const_bitwise, 0x02, 0xAE, 0x47),
        (mul_const_bitwise, 0x0D, 0xFF, 0x97),
        (mul_const_table, 0x02, 0xAE, 0x47),
        (mul_const_table, 0x09, 0x00, 0x00),
        (mul_const_table, 0x0B, 0x53, 0x5B),
        (mul_const_xtime, 0x03, 0xBF, 0xDA),
        (mul_const_xtime, 0x02, 0xAE, 0x47),
        (mul_const_xtime, 0x0E, 0x00, 0x00),
    ],
)
def test_multiplier_examples(fn, c, b, expected):
    assert fn(c, b) == expected


def test_triple_equivalence_exhaustive():
    for c in MUL_CONSTANTS:
        for b in range(256):
            want = gmul_oracle(c, b)
            assert mul_const_bitwise(c, b) == want, (c, b)
            assert mul_const_table(c, b) == want, (c, b)
            assert mul_const_xtime(c, b) == want, (c, b)


@pytest.mark.parametrize("fn", MULTIPLIERS)
@pytest.mark.parametrize("c", [0x00, 0x04, 0x0C, 0x10, 0xFF])
def test_unsupported_constant(fn, c):
    with pytest.raises(DomainError):
        fn(c, 0x12)


@pytest.mark.parametrize("fn", MULTIPLIERS)
def test_vectorized_matches_scalar(fn):
    b = np.arange(256, dtype=np.uint8)
    for c in MUL_CONSTANTS:
        out = fn(c, b)
        assert out.dtype == np.uint8
        assert out.tolist() == [gmul_oracle(c, v) for v in range(256)]


@pytest.mark.parametrize("fn", MULTIPLIERS)
def test_linearity_random_pairs(fn):
    rng = np.random.default_rng(7)
    pairs = rng.integers(0, 256, size=(1200, 2))
    for c in MUL_CONSTANTS:
        for a, b in pairs.tolist():
            assert fn(c, a ^ b) == fn(c, a) ^ fn(c, b)


def test_generated_02_table_spot_values():
    t = generate_table(0x02)
    assert t.entries[0xAE] == 0x47
    assert t.entries[0x80] == 0x1B
    assert t.entries[0x88] == 0x0B


def test_identity_table():
    assert generate_table(0x01).entries == bytes(range(256))


@pytest.mark.parametrize("c", MUL_CONSTANTS)
def test_tables_are_oracle_exact_permutations(c):
    t = generate_table(c)
    assert gf256.verify_table(t) == []
    assert t.is_permutation()
    assert t.nbytes == 256


def test_default_tables_skip_identity():
    tables = gf256.default_tables()
    assert sorted(tables) == [0x02, 0x03, 0x09, 0x0B, 0x0D, 0x0E]
    assert sum(t.nbytes for t in tables.values()) == 1536


def test_table_entries_immutable():
    t = generate_table(0x03)
    with pytest.raises(ValueError):
        t._array[0] = 1


def test_format_table_layout():
    text = gf256.format_table(generate_table(0x02).entries)
    lines = text.splitlines()
    assert len(lines) == 16
    assert lines[0].startswith("0x00,0x02,0x04")
    assert lines[10].endswith("0x47,0x45,")
    assert not lines[15].endswith(",")
