"""State layout, S-box construction, SubBytes, ShiftRows and AddRoundKey.

A state is a ``numpy.uint8`` array whose last two axes are (row, column);
leading axes, if any, index independent blocks.  Block byte ``k`` sits at
row ``k % 4``, column ``k // 4``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from aesmix.errors import InputError
from aesmix.gf256 import gmul_oracle

AFFINE_CONSTANT = 0x63


def bytes_to_state(block: bytes) -> np.ndarray:
    if len(block) != 16:
        raise InputError(f"block must be 16 bytes, got {len(block)}")
    return np.frombuffer(block, dtype=np.uint8).reshape(4, 4).T.copy()


def state_to_bytes(state: np.ndarray) -> bytes:
    return np.ascontiguousarray(state.T).tobytes()


def blocks_to_states(data: bytes) -> np.ndarray:
    """Stack of states, shape ``(n, 4, 4)``, for ``16 * n`` bytes of input."""
    if len(data) % 16:
        raise InputError(f"data length {len(data)} is not a multiple of 16")
    arr = np.frombuffer(data, dtype=np.uint8).reshape(-1, 4, 4)
    return arr.transpose(0, 2, 1).copy()


def states_to_blocks(states: np.ndarray) -> bytes:
    return np.ascontiguousarray(states.transpose(0, 2, 1)).tobytes()


def field_inverse(b: int) -> int:
    """Multiplicative inverse by exhaustive search; 0 maps to itself."""
    if b == 0:
        return 0
    for y in range(1, 256):
        if gmul_oracle(b, y) == 1:
            return y
    raise AssertionError(f"no inverse for {b:#04x}")  # unreachable in a field


def affine(b: int) -> int:
    out = 0
    for i in range(8):
        bit = (
            (b >> i)
            ^ (b >> (i + 4) % 8)
            ^ (b >> (i + 5) % 8)
            ^ (b >> (i + 6) % 8)
            ^ (b >> (i + 7) % 8)
            ^ (AFFINE_CONSTANT >> i)
        ) & 1
        out |= bit << i
    return out


@dataclass(frozen=True)
class SBox:
    forward: bytes
    inverse: bytes
    _fwd: np.ndarray = field(init=False, repr=False, compare=False)
    _inv: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_fwd", np.frombuffer(self.forward, dtype=np.uint8))
        object.__setattr__(self, "_inv", np.frombuffer(self.inverse, dtype=np.uint8))

    def table(self, inverse: bool = False) -> np.ndarray:
        return self._inv if inverse else self._fwd


@lru_cache(maxsize=None)
def build_sbox() -> SBox:
    """Derive the S-box from field inversion followed by the affine map."""
    forward = bytes(affine(field_inverse(b)) for b in range(256))
    inverse = bytearray(256)
    for b, s in enumerate(forward):
        inverse[s] = b
    return SBox(forward, bytes(inverse))


def sub_bytes(s: np.ndarray, box: SBox, inverse: bool = False) -> np.ndarray:
    return box.table(inverse)[s]


# _SHIFT[r][c] is the source column of the byte that lands at (r, c).
_SHIFT = np.array([[(c + r) % 4 for c in range(4)] for r in range(4)])
_UNSHIFT = np.array([[(c - r) % 4 for c in range(4)] for r in range(4)])


def shift_rows(s: np.ndarray, inverse: bool = False) -> np.ndarray:
    """Rotate row ``r`` left by ``r`` (right by ``r`` when ``inverse``)."""
    idx = _UNSHIFT if inverse else _SHIFT
    return np.take_along_axis(s, np.broadcast_to(idx, s.shape), axis=-1)


def add_round_key(s: np.ndarray, rk: np.ndarray | bytes) -> np.ndarray:
    if isinstance(rk, (bytes, bytearray)):
        rk = bytes_to_state(bytes(rk))
    return s ^ rk
