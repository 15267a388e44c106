"""AES-128 whose MixColumns step runs on one of three multiplier architectures.

``bitwise`` evaluates per-bit XOR expansions, ``table`` uses precomputed
multiplication tables and ``xtime`` (the default) chains shift-and-reduce
steps.  All three produce identical ciphertexts.
"""

from aesmix.cipher import (
    Direction,
    Padding,
    decrypt_block,
    encrypt_block,
    process_blocks,
    stream_process,
)
from aesmix.keyschedule import KeySchedule, expand_key
from aesmix.mixcolumns import Arch, MixBackend, get_backend

__all__ = [
    "Arch",
    "Direction",
    "KeySchedule",
    "MixBackend",
    "Padding",
    "decrypt_block",
    "encrypt_block",
    "expand_key",
    "get_backend",
    "process_blocks",
    "stream_process",
]
