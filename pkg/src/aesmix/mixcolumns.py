"""MixColumns and its inverse over a pluggable constant multiplier.

The three architectures differ only in how a byte is multiplied by a matrix
constant; the XOR accumulation below is shared by all of them.
"""

from __future__ import annotations

import enum
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from aesmix import gf256
from aesmix.errors import BackendInitError
from aesmix.gf256 import Byte, MulTable

FORWARD_MATRIX = (
    (0x02, 0x03, 0x01, 0x01),
    (0x01, 0x02, 0x03, 0x01),
    (0x01, 0x01, 0x02, 0x03),
    (0x03, 0x01, 0x01, 0x02),
)

INVERSE_MATRIX = (
    (0x0E, 0x0B, 0x0D, 0x09),
    (0x09, 0x0E, 0x0B, 0x0D),
    (0x0D, 0x09, 0x0E, 0x0B),
    (0x0B, 0x0D, 0x09, 0x0E),
)


class Arch(str, enum.Enum):
    BITWISE = "bitwise"
    TABLE = "table"
    XTIME = "xtime"

    @property
    def label(self) -> str:
        return {
            Arch.BITWISE: "ARCH1_BITWISE",
            Arch.TABLE: "ARCH2_TABLE",
            Arch.XTIME: "ARCH3_XTIME",
        }[self]


DEFAULT_ARCH = Arch.XTIME


class MixBackend:
    """Constant multiplier for one architecture.

    Table backends take their tables at construction and refuse to exist
    unless all six non-trivial tables are present and agree with the oracle.
    """

    __slots__ = ("arch", "_tables")

    def __init__(self, arch: Arch | str, tables: dict[int, MulTable] | None = None):
        self.arch = Arch(arch)
        self._tables: dict[int, MulTable] | None = None
        if self.arch is Arch.TABLE:
            if tables is None:
                tables = gf256.default_tables()
            missing = [c for c in gf256.MUL_CONSTANTS[1:] if c not in tables]
            if missing:
                raise BackendInitError(
                    "table backend missing tables for "
                    + ", ".join(f"0x{c:02X}" for c in missing)
                )
            for c in gf256.MUL_CONSTANTS[1:]:
                if tables[c].constant != c or gf256.verify_table(tables[c]):
                    raise BackendInitError(f"table for 0x{c:02X} failed oracle check")
            self._tables = {c: tables[c] for c in gf256.MUL_CONSTANTS[1:]}
        elif tables is not None:
            raise BackendInitError(f"{self.arch.value} backend takes no tables")

    def __repr__(self) -> str:
        return f"MixBackend({self.arch.value!r})"

    @property
    def name(self) -> str:
        return self.arch.value

    @property
    def table_bytes(self) -> int:
        """Bytes of lookup storage held by this backend."""
        if self._tables is None:
            return 0
        return sum(t.nbytes for t in self._tables.values())

    def mul(self, c: int, b: Byte) -> Byte:
        if self.arch is Arch.BITWISE:
            return gf256.mul_const_bitwise(c, b)
        if self.arch is Arch.TABLE:
            if self._tables is None:
                raise BackendInitError("table backend used before initialization")
            return gf256.mul_const_table(c, b, self._tables)
        return gf256.mul_const_xtime(c, b)


@lru_cache(maxsize=None)
def get_backend(arch: Arch | str = DEFAULT_ARCH) -> MixBackend:
    """Shared, immutable backend instance for ``arch``."""
    return MixBackend(Arch(arch))


def all_backends() -> list[MixBackend]:
    return [get_backend(a) for a in Arch]


def _apply(matrix, col: Sequence[Byte], backend: MixBackend) -> list[Byte]:
    b0, b1, b2, b3 = col
    mul = backend.mul
    return [
        mul(r[0], b0) ^ mul(r[1], b1) ^ mul(r[2], b2) ^ mul(r[3], b3)
        for r in matrix
    ]


def _column(col, backend, matrix):
    if backend is None:
        backend = get_backend()
    if isinstance(col, np.ndarray):
        if col.shape[-1] != 4:
            raise ValueError(f"column must have 4 entries, got shape {col.shape}")
        out = _apply(matrix, [col[..., i] for i in range(4)], backend)
        return np.stack(out, axis=-1).astype(np.uint8)
    if len(col) != 4:
        raise ValueError(f"column must have 4 entries, got {len(col)}")
    return [int(v) for v in _apply(matrix, list(col), backend)]


def mix_column(col, backend: MixBackend | None = None):
    """Forward MixColumns on one column (a 4-sequence or array ``(..., 4)``)."""
    return _column(col, backend, FORWARD_MATRIX)


def inv_mix_column(col, backend: MixBackend | None = None):
    return _column(col, backend, INVERSE_MATRIX)


def mix_columns(
    s: np.ndarray, backend: MixBackend | None = None, inverse: bool = False
) -> np.ndarray:
    """Apply (inverse) MixColumns to all four columns of ``s`` at once."""
    if backend is None:
        backend = get_backend()
    matrix = INVERSE_MATRIX if inverse else FORWARD_MATRIX
    rows = [s[..., r, :] for r in range(4)]
    out = _apply(matrix, rows, backend)
    return np.stack(out, axis=-2).astype(np.uint8, copy=False)
