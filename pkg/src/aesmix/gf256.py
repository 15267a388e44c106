"""Arithmetic in GF(2^8) reduced by x^8 + x^4 + x^3 + x + 1.

Three independent ways of multiplying a byte by one of the MixColumns
constants live here, one per architecture:

* ``mul_const_bitwise`` evaluates a fixed XOR expansion per output bit,
* ``mul_const_table`` reads a precomputed 256-entry table,
* ``mul_const_xtime`` chains shift-and-reduce steps.

All three accept either a Python ``int`` or a ``numpy.uint8`` array, so the
same code path serves single blocks and vectorized batches.  ``gmul_oracle``
is a separate shift-and-add multiplier used only to check the others.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Union

import numpy as np

from aesmix.errors import DomainError

Byte = Union[int, np.ndarray]

#: x^8 + x^4 + x^3 + x + 1 with the x^8 term dropped: the feedback XORed in
#: whenever a shift pushes a bit out of the byte.
REDUCTION = 0x1B

#: Every constant appearing in the forward or inverse MixColumns matrix.
MUL_CONSTANTS = (0x01, 0x02, 0x03, 0x09, 0x0B, 0x0D, 0x0E)

# Output bit i of c*m is the XOR of the input bits listed at position i,
# with m0 the least significant bit.  0x01 is the identity and has no entry.
_EXPANSIONS: dict[int, tuple[tuple[int, ...], ...]] = {
    0x02: ((7,), (0, 7), (1,), (2, 7), (3, 7), (4,), (5,), (6,)),
    0x03: ((0, 7), (0, 1, 7), (1, 2), (2, 3, 7), (3, 4, 7), (4, 5), (5, 6), (6, 7)),
    0x09: (
        (0, 5),
        (1, 5, 6),
        (2, 6, 7),
        (0, 3, 5, 7),
        (1, 4, 5, 6),
        (2, 5, 6, 7),
        (3, 6, 7),
        (4, 7),
    ),
    0x0B: (
        (0, 5, 7),
        (0, 1, 5, 6, 7),
        (1, 2, 6, 7),
        (0, 2, 3, 5),
        (1, 3, 4, 5, 6, 7),
        (2, 4, 5, 6, 7),
        (3, 5, 6, 7),
        (4, 6, 7),
    ),
    0x0D: (
        (0, 5, 6),
        (1, 5, 7),
        (0, 2, 6),
        (0, 1, 3, 5, 6, 7),
        (1, 2, 4, 5, 7),
        (2, 3, 5, 6),
        (3, 4, 6, 7),
        (4, 5, 7),
    ),
    0x0E: (
        (5, 6, 7),
        (0, 5),
        (0, 1, 6),
        (0, 1, 2, 5, 6),
        (1, 2, 3, 5),
        (2, 3, 4, 6),
        (3, 4, 5, 7),
        (4, 5, 6),
    ),
}


def _check_constant(c: int) -> None:
    if c not in MUL_CONSTANTS:
        raise DomainError(
            f"unsupported MixColumns constant {c!r}; expected one of "
            + ", ".join(f"0x{k:02X}" for k in MUL_CONSTANTS)
        )


def xtime(b: Byte) -> Byte:
    """Multiply by 0x02: shift left, then fold the lost MSB back in as 0x1B."""
    and_mask = (b >> 7) * 0xFF
    return ((b << 1) & 0xFF) ^ (REDUCTION & and_mask)


def gmul_oracle(a: int, b: int) -> int:
    """Full field product by shift-and-add over all eight multiplier bits.

    Deliberately shares no code with the three architectures so that it can
    serve as ground truth for them.
    """
    a &= 0xFF
    b &= 0xFF
    product = 0
    for _ in range(8):
        if b & 1:
            product ^= a
        carry = a & 0x80
        a = (a << 1) & 0xFF
        if carry:
            a ^= REDUCTION
        b >>= 1
    return product


def mul_const_bitwise(c: int, b: Byte) -> Byte:
    """Architecture 1: evaluate the per-bit XOR expansion of ``c * b``."""
    _check_constant(c)
    if c == 0x01:
        return b
    bits = [(b >> k) & 1 for k in range(8)]
    out = 0
    for i, taps in enumerate(_EXPANSIONS[c]):
        v = bits[taps[0]]
        for k in taps[1:]:
            v = v ^ bits[k]
        out = out | (v << i)
    return out


def mul_const_xtime(c: int, b: Byte) -> Byte:
    """Architecture 3: combine up to three chained xtime results."""
    _check_constant(c)
    if c == 0x01:
        return b
    temp1 = xtime(b)
    if c == 0x02:
        return temp1
    if c == 0x03:
        return temp1 ^ b
    temp2 = xtime(temp1)
    temp3 = xtime(temp2)
    if c == 0x09:
        return temp3 ^ b
    if c == 0x0B:
        return temp1 ^ temp3 ^ b
    if c == 0x0D:
        return temp2 ^ temp3 ^ b
    # 0x0E
    return temp1 ^ temp2 ^ temp3


@dataclass(frozen=True)
class MulTable:
    """256-entry lookup table of ``constant * b``."""

    constant: int
    entries: bytes
    _array: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        _check_constant(self.constant)
        if len(self.entries) != 256:
            raise DomainError(f"table needs 256 entries, got {len(self.entries)}")
        arr = np.frombuffer(self.entries, dtype=np.uint8)
        object.__setattr__(self, "_array", arr)

    @property
    def nbytes(self) -> int:
        return self._array.nbytes

    def lookup(self, b: Byte) -> Byte:
        if isinstance(b, np.ndarray):
            return self._array[b]
        return self.entries[b]

    def is_permutation(self) -> bool:
        return len(set(self.entries)) == 256


def generate_table(c: int) -> MulTable:
    """Build the table for ``c`` from powers of x obtained by repeated xtime.

    ``c`` is decomposed into its set bits, so the table is the XOR of the
    matching rows of the x, x^2, x^3 tables.  Nothing is copied from a
    printed source.
    """
    _check_constant(c)
    powers = [list(range(256))]
    for _ in range(3):
        powers.append([xtime(v) for v in powers[-1]])
    entries = bytearray(256)
    for k, row in enumerate(powers):
        if c >> k & 1:
            for b in range(256):
                entries[b] ^= row[b]
    return MulTable(c, bytes(entries))


def verify_table(table: MulTable) -> list[int]:
    """Return every index where ``table`` disagrees with the oracle."""
    return [
        b
        for b in range(256)
        if table.entries[b] != gmul_oracle(table.constant, b)
    ]


@lru_cache(maxsize=None)
def default_tables() -> dict[int, MulTable]:
    """Tables for the six non-trivial constants, generated and oracle-checked once.

    The 0x01 table is the identity and is never stored.
    """
    tables = {}
    for c in MUL_CONSTANTS[1:]:
        t = generate_table(c)
        bad = verify_table(t)
        if bad:
            raise AssertionError(f"generated table 0x{c:02X} wrong at {bad[:4]}")
        tables[c] = t
    return tables


def mul_const_table(c: int, b: Byte, tables: dict[int, MulTable] | None = None) -> Byte:
    """Architecture 2: look ``b`` up in the precomputed table for ``c``."""
    _check_constant(c)
    if c == 0x01:
        return b
    if tables is None:
        tables = default_tables()
    return tables[c].lookup(b)


def format_table(entries: bytes | list[int]) -> str:
    """16x16 lowercase ``0x..`` grid, comma separated, one row per line."""
    rows = []
    for r in range(16):
        row = ",".join(f"0x{v:02x}" for v in entries[16 * r : 16 * r + 16])
        rows.append(row + ("," if r < 15 else ""))
    return "\n".join(rows)
