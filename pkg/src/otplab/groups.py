"""Generic-group realization of an asymmetric bilinear pairing setting.

Elements of G1, G2 and GT are stored as discrete logs relative to each
group's fixed generator, all three groups sharing one prime order q.
Every algebraic relation is therefore exactly checkable; nothing here is
cryptographically hard, which is the point: the protocols built on top
can be verified equation by equation at desk scale.

Randomness enters only through explicitly passed ``random.Random``
instances, so all callers are reproducible from a seed.
"""

from __future__ import annotations

import functools
import hashlib
from dataclasses import dataclass
from random import Random

from .errors import GroupError

#: Default group order: 2^61 - 1, a Mersenne prime. Products of two
#: reduced residues stay well inside 128-bit intermediates, and small
#: primes (e.g. 101) remain available for hand-checkable tests.
MERSENNE_61 = (1 << 61) - 1

G1 = "G1"
G2 = "G2"
GT = "GT"

_GROUP_TAGS = {G1: 1, G2: 2, GT: 3}


@functools.lru_cache(maxsize=128)
def is_prime(n: int) -> bool:
    """Primality check for group-order validation (cached per modulus)."""
    from sympy import isprime  # deferred: sympy import is slow

    return bool(isprime(n))


@dataclass(frozen=True)
class GroupElement:
    """Element of G1, G2 or GT in exponent form.

    ``exponent`` is always reduced mod ``q``; the generator is exponent 1
    and the identity exponent 0.
    """

    group: str
    exponent: int
    q: int

    def __post_init__(self):
        if self.group not in _GROUP_TAGS:
            raise GroupError(f"unknown group tag {self.group!r}")
        object.__setattr__(self, "exponent", self.exponent % self.q)

    def _require_same_group(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if self.group != other.group or self.q != other.q:
            raise GroupError(
                f"cannot combine {self.group} (q={self.q}) with "
                f"{other.group} (q={other.q})"
            )

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        self._require_same_group(other)
        return GroupElement(self.group, self.exponent + other.exponent, self.q)

    def __truediv__(self, other: "GroupElement") -> "GroupElement":
        return self * other.inverse()

    def __pow__(self, scalar: int) -> "GroupElement":
        return GroupElement(self.group, self.exponent * (scalar % self.q), self.q)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.group, -self.exponent, self.q)

    def is_identity(self) -> bool:
        return self.exponent == 0

    def to_bytes(self) -> bytes:
        """Canonical wire form: group tag byte + little-endian exponent."""
        width = (self.q.bit_length() + 7) // 8
        return bytes([_GROUP_TAGS[self.group]]) + self.exponent.to_bytes(width, "little")


@dataclass(frozen=True)
class PairingParams:
    """The pairing setting: one prime order q shared by G1, G2 and GT."""

    q: int = MERSENNE_61

    def __post_init__(self):
        if self.q < 2 or not is_prime(self.q):
            raise GroupError(f"group order must be prime, got {self.q}")

    @property
    def g1(self) -> GroupElement:
        return GroupElement(G1, 1, self.q)

    @property
    def g2(self) -> GroupElement:
        return GroupElement(G2, 1, self.q)

    @property
    def gt(self) -> GroupElement:
        return GroupElement(GT, 1, self.q)

    def identity(self, group: str) -> GroupElement:
        return GroupElement(group, 0, self.q)

    def random_scalar(self, rng: Random, *, nonzero: bool = False) -> int:
        return random_scalar(self.q, rng, nonzero=nonzero)


def random_scalar(q: int, rng: Random, *, nonzero: bool = False) -> int:
    """Uniform residue mod q; with ``nonzero`` the draw is from Z_q^*."""
    if nonzero:
        return rng.randrange(1, q)
    return rng.randrange(q)


def pairing(a: GroupElement, b: GroupElement) -> GroupElement:
    """Bilinear map G1 x G2 -> GT: exponents multiply mod q."""
    if a.group != G1 or b.group != G2:
        raise GroupError(f"pairing takes (G1, G2), got ({a.group}, {b.group})")
    if a.q != b.q:
        raise GroupError(f"pairing across mismatched moduli {a.q} != {b.q}")
    return GroupElement(GT, a.exponent * b.exponent, a.q)


def hash_to_g1(t: int, params: PairingParams) -> GroupElement:
    """Deterministic hash of a field element onto G1, never the identity.

    The exponent is a domain-separated SHA-256 digest of t reduced mod q;
    the measure-zero identity case is remapped by bumping a counter.
    """
    q = params.q
    width = (q.bit_length() + 7) // 8
    encoded = (t % q).to_bytes(width, "little")
    counter = 0
    while True:
        digest = hashlib.sha256(
            b"otplab/hash-to-g1" + counter.to_bytes(4, "little") + encoded
        ).digest()
        exponent = int.from_bytes(digest, "little") % q
        if exponent != 0:
            return GroupElement(G1, exponent, q)
        counter += 1
