"""Symmetric primitives of EPC Gen2-class tags and ideal public-key records.

The tag-side toolbox is deliberately tiny: a 16-bit CRC, a 16-bit LFSR
used as the PRNG, and a keyed digest standing in for an HMAC. Signatures
and public-key encryption are modeled as ideal functionalities backed by
a trusted in-process ledger, since no attack in scope touches them.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from random import Random
from typing import Iterable

from .errors import ConfigError, WrongKeyError

# --------------------------------------------------------------------------
# CRC-16/CCITT-FALSE: poly 0x1021, init 0xFFFF, no reflection, no final xor.
# Check value: crc16(b"123456789") == 0x29B1.

_CRC16_POLY = 0x1021
_CRC16_INIT = 0xFFFF


def _build_crc_table() -> list[int]:
    table = []
    for byte in range(256):
        crc = byte << 8
        for _ in range(8):
            if crc & 0x8000:
                crc = ((crc << 1) ^ _CRC16_POLY) & 0xFFFF
            else:
                crc = (crc << 1) & 0xFFFF
        table.append(crc)
    return table


_CRC_TABLE = _build_crc_table()


def crc16(data: bytes) -> int:
    """Table-driven CRC-16/CCITT-FALSE over a byte string."""
    crc = _CRC16_INIT
    for byte in data:
        crc = ((crc << 8) & 0xFFFF) ^ _CRC_TABLE[((crc >> 8) ^ byte) & 0xFF]
    return crc


def crc16_reference(data: bytes) -> int:
    """Bit-serial form of the same CRC, kept for self-checks of the table."""
    crc = _CRC16_INIT
    for byte in data:
        crc ^= byte << 8
        for _ in range(8):
            if crc & 0x8000:
                crc = ((crc << 1) ^ _CRC16_POLY) & 0xFFFF
            else:
                crc = (crc << 1) & 0xFFFF
    return crc


def crc_word(data: bytes, width: int = 16) -> int:
    """CRC-16 adapted to a w-bit word: truncated below 16 bits, zero-extended above."""
    if width < 16:
        return crc16(data) & ((1 << width) - 1)
    return crc16(data)


# --------------------------------------------------------------------------
# PRNG: Fibonacci LFSR, one word-width step per call. Tap sets are maximal
# length for each supported width. The all-zero state (a fixed point of any
# LFSR) is remapped to a fixed nonzero constant.

_LFSR_TAPS = {
    8: (8, 6, 5, 4),
    16: (16, 15, 13, 4),
    32: (32, 22, 2, 1),
}

_ZERO_STATE_REMAP = 0xACE1ACE1


def prng_step(state: int, width: int = 16) -> int:
    """One LFSR step on a w-bit word; prng_step(0) is a fixed nonzero constant."""
    try:
        taps = _LFSR_TAPS[width]
    except KeyError:
        raise ConfigError(f"unsupported word width {width}; choose 8, 16 or 32") from None
    mask = (1 << width) - 1
    state &= mask
    if state == 0:
        return _ZERO_STATE_REMAP & mask
    bit = 0
    for tap in taps:
        bit ^= state >> (width - tap)
    return (state >> 1) | ((bit & 1) << (width - 1))


def prng_iter(state: int, count: int, width: int = 16) -> int:
    """count-fold composition of prng_step; count == 0 returns state unchanged."""
    if count < 0:
        raise ValueError(f"iteration count must be non-negative, got {count}")
    for _ in range(count):
        state = prng_step(state, width)
    return state


# --------------------------------------------------------------------------
# Keyed digest. Key and every part are length-prefixed, so part boundaries
# are unambiguous ("ab","c" never collides with "a","bc").

DIGEST_LEN = 16


def keyed_hash(key: bytes, parts: Iterable[bytes], out_len: int = DIGEST_LEN) -> bytes:
    h = hashlib.sha256()
    h.update(len(key).to_bytes(4, "little"))
    h.update(key)
    for part in parts:
        h.update(len(part).to_bytes(4, "little"))
        h.update(part)
    return h.digest()[:out_len]


# --------------------------------------------------------------------------
# Ideal signatures / public-key encryption. Handles are opaque random
# tokens; plaintexts and claims live in the ledger and are released only
# against the exact identity they were bound to.


@dataclass(frozen=True)
class IdealCiphertext:
    handle: bytes

    def __repr__(self):  # do not leak handle material in logs
        return f"IdealCiphertext({self.handle[:4].hex()}..)"


@dataclass(frozen=True)
class IdealSignature:
    handle: bytes

    def __repr__(self):
        return f"IdealSignature({self.handle[:4].hex()}..)"


@dataclass
class IdealPki:
    """Single-writer trusted ledger for sign/verify and encrypt/decrypt.

    Concurrent protocol sessions must use independent instances or
    serialize access; nothing here is thread-safe by itself.
    """

    rng: Random
    _ciphertexts: dict[bytes, tuple[str, object]] = field(default_factory=dict)
    _signatures: dict[bytes, tuple[str, object]] = field(default_factory=dict)

    def _fresh_handle(self, table: dict) -> bytes:
        while True:
            handle = self.rng.randbytes(16)
            if handle not in table:
                return handle

    def encrypt(self, recipient: str, message) -> IdealCiphertext:
        if not recipient:
            raise WrongKeyError("encryption requires a recipient identity")
        handle = self._fresh_handle(self._ciphertexts)
        self._ciphertexts[handle] = (recipient, message)
        return IdealCiphertext(handle)

    def decrypt(self, recipient: str, ciphertext: IdealCiphertext):
        entry = self._ciphertexts.get(ciphertext.handle)
        if entry is None:
            raise WrongKeyError("unknown ciphertext handle")
        bound_to, message = entry
        if not recipient or recipient != bound_to:
            raise WrongKeyError(f"ciphertext is not addressed to {recipient!r}")
        return message

    def sign(self, signer: str, message) -> IdealSignature:
        if not signer:
            raise WrongKeyError("signing requires a signer identity")
        handle = self._fresh_handle(self._signatures)
        self._signatures[handle] = (signer, message)
        return IdealSignature(handle)

    def verify(self, signer: str, message, signature: IdealSignature) -> bool:
        entry = self._signatures.get(signature.handle)
        if entry is None:
            return False
        return entry == (signer, message)
