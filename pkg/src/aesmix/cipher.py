"""AES-128 block encryption and decryption, plus an ECB driver.

ECB is offered only as a vehicle for files and benchmarks; it leaks equal
plaintext blocks and is not a secure mode.
"""

from __future__ import annotations

import enum
from typing import BinaryIO

import numpy as np

from aesmix.errors import InputError, PaddingError
from aesmix.keyschedule import NR, KeySchedule, expand_key
from aesmix.mixcolumns import MixBackend, get_backend, mix_columns
from aesmix.transforms import (
    add_round_key,
    blocks_to_states,
    build_sbox,
    shift_rows,
    states_to_blocks,
    sub_bytes,
)

BLOCK_SIZE = 16


class Direction(enum.Enum):
    ENCRYPT = "encrypt"
    DECRYPT = "decrypt"


class Padding(enum.Enum):
    PKCS7 = "pkcs7"
    NONE = "none"


def encrypt_states(
    states: np.ndarray,
    ks: KeySchedule,
    backend: MixBackend | None = None,
    trace: list | None = None,
) -> np.ndarray:
    """Encrypt a state or a stack of states.

    When ``trace`` is a list, one ``(round, step)`` pair is appended per
    transform applied, in order.
    """
    backend = backend or get_backend()
    box = build_sbox()
    rk = ks.states

    def log(r, step):
        if trace is not None:
            trace.append((r, step))

    s = add_round_key(states, rk[0])
    log(0, "add_round_key")
    for r in range(1, NR + 1):
        s = sub_bytes(s, box)
        log(r, "sub_bytes")
        s = shift_rows(s)
        log(r, "shift_rows")
        if r != NR:
            s = mix_columns(s, backend)
            log(r, "mix_columns")
        s = add_round_key(s, rk[r])
        log(r, "add_round_key")
    return s


def decrypt_states(
    states: np.ndarray,
    ks: KeySchedule,
    backend: MixBackend | None = None,
    trace: list | None = None,
) -> np.ndarray:
    backend = backend or get_backend()
    box = build_sbox()
    rk = ks.states

    def log(r, step):
        if trace is not None:
            trace.append((r, step))

    s = add_round_key(states, rk[NR])
    log(NR, "add_round_key")
    for r in range(NR - 1, -1, -1):
        s = shift_rows(s, inverse=True)
        log(r, "inv_shift_rows")
        s = sub_bytes(s, box, inverse=True)
        log(r, "inv_sub_bytes")
        s = add_round_key(s, rk[r])
        log(r, "add_round_key")
        if r != 0:
            s = mix_columns(s, backend, inverse=True)
            log(r, "inv_mix_columns")
    return s


def _schedule(key: bytes | KeySchedule) -> KeySchedule:
    return key if isinstance(key, KeySchedule) else expand_key(key)


def encrypt_block(
    pt: bytes, ks: KeySchedule | bytes, backend: MixBackend | None = None, trace=None
) -> bytes:
    if len(pt) != BLOCK_SIZE:
        raise InputError(f"block must be 16 bytes, got {len(pt)}")
    return encrypt_blocks(pt, ks, backend, trace)


def decrypt_block(
    ct: bytes, ks: KeySchedule | bytes, backend: MixBackend | None = None, trace=None
) -> bytes:
    if len(ct) != BLOCK_SIZE:
        raise InputError(f"block must be 16 bytes, got {len(ct)}")
    return decrypt_blocks(ct, ks, backend, trace)


def encrypt_blocks(
    data: bytes, ks: KeySchedule | bytes, backend: MixBackend | None = None, trace=None
) -> bytes:
    """ECB-encrypt a whole number of blocks in one vectorized pass."""
    if not data:
        return b""
    states = blocks_to_states(bytes(data))
    return states_to_blocks(encrypt_states(states, _schedule(ks), backend, trace))


def decrypt_blocks(
    data: bytes, ks: KeySchedule | bytes, backend: MixBackend | None = None, trace=None
) -> bytes:
    if not data:
        return b""
    states = blocks_to_states(bytes(data))
    return states_to_blocks(decrypt_states(states, _schedule(ks), backend, trace))


def pkcs7_pad(data: bytes, block_size: int = BLOCK_SIZE) -> bytes:
    n = block_size - len(data) % block_size
    return data + bytes([n]) * n


def pkcs7_unpad(data: bytes, block_size: int = BLOCK_SIZE) -> bytes:
    if not data or len(data) % block_size:
        raise PaddingError("padded data must be a positive multiple of the block size")
    n = data[-1]
    if not 1 <= n <= block_size or data[-n:] != bytes([n]) * n:
        raise PaddingError("invalid PKCS#7 padding")
    return data[:-n]


def process_blocks(
    data: bytes,
    key: bytes | KeySchedule,
    direction: Direction | str,
    backend: MixBackend | None = None,
    padding: Padding | str = Padding.PKCS7,
) -> bytes:
    """Encrypt or decrypt ``data`` in ECB mode, in memory."""
    direction = Direction(direction)
    padding = Padding(padding)
    ks = _schedule(key)
    data = bytes(data)
    if direction is Direction.ENCRYPT:
        if padding is Padding.PKCS7:
            data = pkcs7_pad(data)
        elif len(data) % BLOCK_SIZE:
            raise InputError(
                f"input length {len(data)} is not a multiple of 16 and padding is none"
            )
        return encrypt_blocks(data, ks, backend)

    if len(data) % BLOCK_SIZE or (padding is Padding.PKCS7 and not data):
        raise InputError(
            f"ciphertext length {len(data)} is not a positive multiple of 16"
        )
    out = decrypt_blocks(data, ks, backend)
    return pkcs7_unpad(out) if padding is Padding.PKCS7 else out


def _read_full(src: BinaryIO, n: int) -> bytes:
    # Pipes may return short reads; keep going until n bytes or EOF.
    parts = []
    while n > 0:
        chunk = src.read(n)
        if not chunk:
            break
        parts.append(chunk)
        n -= len(chunk)
    return b"".join(parts)


def stream_process(
    src: BinaryIO,
    dst: BinaryIO,
    key: bytes | KeySchedule,
    direction: Direction | str,
    backend: MixBackend | None = None,
    padding: Padding | str = Padding.PKCS7,
    chunk_size: int = 64 * 1024,
) -> int:
    """Streaming counterpart of :func:`process_blocks` in bounded memory.

    Returns the number of bytes written.
    """
    if chunk_size <= 0 or chunk_size % BLOCK_SIZE:
        raise ValueError("chunk_size must be a positive multiple of 16")
    direction = Direction(direction)
    padding = Padding(padding)
    ks = _schedule(key)
    op = encrypt_blocks if direction is Direction.ENCRYPT else decrypt_blocks
    written = 0
    total = 0
    held = b""  # last decrypted block, kept back until padding can be checked

    chunk = _read_full(src, chunk_size)
    while True:
        nxt = _read_full(src, chunk_size) if len(chunk) == chunk_size else b""
        last = not nxt
        total += len(chunk)
        if last:
            if direction is Direction.ENCRYPT:
                if padding is Padding.PKCS7:
                    chunk = pkcs7_pad(chunk)
                elif len(chunk) % BLOCK_SIZE:
                    raise InputError(
                        f"input length {total} is not a multiple of 16 and padding is none"
                    )
            elif total % BLOCK_SIZE or (padding is Padding.PKCS7 and total == 0):
                raise InputError(f"ciphertext length {total} is not a positive multiple of 16")
        out = op(chunk, ks, backend)
        if direction is Direction.DECRYPT and padding is Padding.PKCS7:
            out = held + out
            if last:
                out = out[:-BLOCK_SIZE] + pkcs7_unpad(out[-BLOCK_SIZE:])
            else:
                held, out = out[-BLOCK_SIZE:], out[:-BLOCK_SIZE]
        dst.write(out)
        written += len(out)
        if last:
            return written
        chunk = nxt
