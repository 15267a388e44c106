"""AES-128 key expansion: one 16-byte key into eleven round keys."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from aesmix.errors import DomainError, InputError
from aesmix.gf256 import xtime
from aesmix.transforms import SBox, build_sbox, bytes_to_state

NK = 4  # key length in 32-bit words
NB = 4  # block length in 32-bit words
NR = 10  # initial AddRoundKey + 9 full rounds + final round without MixColumns


def rcon(j: int) -> int:
    """Round constant x^(j-1) for ``1 <= j <= 10``."""
    if not 1 <= j <= NR:
        raise DomainError(f"round constant index must be in 1..{NR}, got {j}")
    v = 0x01
    for _ in range(j - 1):
        v = xtime(v)
    return v


@dataclass(frozen=True)
class KeySchedule:
    round_keys: tuple[bytes, ...]
    states: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if len(self.round_keys) != NR + 1:
            raise InputError(f"expected {NR + 1} round keys, got {len(self.round_keys)}")
        states = np.stack([bytes_to_state(rk) for rk in self.round_keys])
        states.setflags(write=False)
        object.__setattr__(self, "states", states)

    @property
    def words(self) -> list[bytes]:
        """The 44 expanded words ``w[0..43]``."""
        return [rk[i : i + 4] for rk in self.round_keys for i in range(0, 16, 4)]


def expand_key(key: bytes, box: SBox | None = None) -> KeySchedule:
    key = bytes(key)
    if len(key) != 4 * NK:
        raise InputError(f"AES-128 key must be 16 bytes, got {len(key)}")
    if box is None:
        box = build_sbox()
    sub = box.forward
    w = [key[i : i + 4] for i in range(0, 16, 4)]
    for i in range(NK, NB * (NR + 1)):
        t = w[i - 1]
        if i % NK == 0:
            t = bytes((sub[t[1]] ^ rcon(i // NK), sub[t[2]], sub[t[3]], sub[t[0]]))
        w.append(bytes(a ^ b for a, b in zip(w[i - NK], t)))
    return KeySchedule(tuple(b"".join(w[4 * r : 4 * r + 4]) for r in range(NR + 1)))
