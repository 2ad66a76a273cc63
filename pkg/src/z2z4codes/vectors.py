"""Arithmetic on mixed binary/quaternary vectors.

A vector lives in Z2^alpha x Z4^beta.  Both parts are packed big-endian
into plain ints (one bit per binary coordinate, two bits per quaternary
coordinate), so numeric order on (x, y) coincides with lexicographic
order on the coordinate tuples and all arithmetic reduces to bit tricks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import ParseError, ShapeMismatch


@lru_cache(maxsize=None)
def _lo_mask(beta: int) -> int:
    """Mask selecting the low bit of every 2-bit quaternary lane."""
    mask = 0
    for _ in range(beta):
        mask = (mask << 2) | 1
    return mask


@dataclass(frozen=True, slots=True)
class AmbientParams:
    """Shape (alpha, beta) of an ambient group Z2^alpha x Z4^beta."""

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be nonnegative")

    @property
    def n(self) -> int:
        """Binary length alpha + 2*beta."""
        return self.alpha + 2 * self.beta

    @property
    def size(self) -> int:
        """Number of ambient vectors, 2^alpha * 4^beta."""
        return 1 << self.n


@dataclass(frozen=True, slots=True)
class MixedVector:
    """Element of Z2^alpha x Z4^beta, packed as two big-endian ints."""

    alpha: int
    beta: int
    x: int
    y: int

    def __post_init__(self) -> None:
        if not 0 <= self.x < (1 << self.alpha):
            raise ValueError(f"binary part out of range for alpha={self.alpha}")
        if not 0 <= self.y < (1 << (2 * self.beta)):
            raise ValueError(f"quaternary part out of range for beta={self.beta}")

    @classmethod
    def from_parts(cls, binary: Iterable[int], quaternary: Iterable[int]) -> "MixedVector":
        bits = tuple(binary)
        digits = tuple(quaternary)
        x = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"binary entry {b!r} not in {{0,1}}")
            x = (x << 1) | b
        y = 0
        for d in digits:
            if d not in (0, 1, 2, 3):
                raise ValueError(f"quaternary entry {d!r} not in {{0,1,2,3}}")
            y = (y << 2) | d
        return cls(len(bits), len(digits), x, y)

    @classmethod
    def zero(cls, alpha: int, beta: int) -> "MixedVector":
        return cls(alpha, beta, 0, 0)

    @classmethod
    def parse(cls, literal: str, line: int | None = None) -> "MixedVector":
        """Parse the literal syntax ``<bits>|<digits>``, e.g. ``11|20``."""
        if literal.count("|") != 1:
            raise ParseError(f"vector literal {literal!r} must contain exactly one '|'", line)
        left, right = literal.split("|")
        for ch in left:
            if ch not in "01":
                raise ParseError(f"invalid binary symbol {ch!r} in {literal!r}", line)
        for ch in right:
            if ch not in "0123":
                raise ParseError(f"invalid quaternary symbol {ch!r} in {literal!r}", line)
        return cls.from_parts((int(c) for c in left), (int(c) for c in right))

    @property
    def ambient(self) -> AmbientParams:
        return AmbientParams(self.alpha, self.beta)

    @property
    def binary_part(self) -> tuple[int, ...]:
        a = self.alpha
        return tuple((self.x >> (a - 1 - i)) & 1 for i in range(a))

    @property
    def quaternary_part(self) -> tuple[int, ...]:
        b = self.beta
        return tuple((self.y >> (2 * (b - 1 - j))) & 3 for j in range(b))

    def literal(self) -> str:
        return "".join(map(str, self.binary_part)) + "|" + "".join(map(str, self.quaternary_part))

    def __str__(self) -> str:
        return self.literal()

    def _check_shape(self, other: "MixedVector") -> None:
        if self.alpha != other.alpha or self.beta != other.beta:
            raise ShapeMismatch(
                f"shape mismatch: ({self.alpha},{self.beta}) vs ({other.alpha},{other.beta})"
            )

    def __add__(self, other: "MixedVector") -> "MixedVector":
        self._check_shape(other)
        lo = _lo_mask(self.beta)
        a, b = self.y, other.y
        y = a ^ b ^ ((a & b & lo) << 1)
        return MixedVector(self.alpha, self.beta, self.x ^ other.x, y)

    def __neg__(self) -> "MixedVector":
        lo = _lo_mask(self.beta)
        return MixedVector(self.alpha, self.beta, self.x, self.y ^ ((self.y & lo) << 1))

    def __sub__(self, other: "MixedVector") -> "MixedVector":
        return self + (-other)

    def scale(self, c: int) -> "MixedVector":
        """Z4 scalar action: mod 2 on the binary part, mod 4 on the quaternary."""
        c %= 4
        if c == 0:
            return MixedVector(self.alpha, self.beta, 0, 0)
        if c == 1:
            return self
        lo = _lo_mask(self.beta)
        if c == 2:
            return MixedVector(self.alpha, self.beta, 0, (self.y & lo) << 1)
        return -self

    def __mul__(self, c: int) -> "MixedVector":
        return self.scale(c)

    __rmul__ = __mul__

    def concat(self, other: "MixedVector") -> "MixedVector":
        """Concatenate with binary parts adjacent and quaternary parts adjacent."""
        return MixedVector(
            self.alpha + other.alpha,
            self.beta + other.beta,
            (self.x << other.alpha) | other.x,
            (self.y << (2 * other.beta)) | other.y,
        )

    @property
    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def order(self) -> int:
        """Additive order: 1, 2 or 4."""
        if self.is_zero:
            return 1
        return 2 if self.y & _lo_mask(self.beta) == 0 else 4

    def sort_key(self) -> tuple[int, int]:
        """Key realising lexicographic order on (binary_part, quaternary_part)."""
        return (self.x, self.y)


def all_of(j: int, alpha: int, k: int, beta: int) -> MixedVector:
    """The constant vector (j^alpha | k^beta)."""
    return MixedVector.from_parts([j] * alpha, [k] * beta)


def ambient_vectors(ambient: AmbientParams) -> Iterator[MixedVector]:
    """All vectors of the ambient group in lexicographic order."""
    for x in range(1 << ambient.alpha):
        for y in range(1 << (2 * ambient.beta)):
            yield MixedVector(ambient.alpha, ambient.beta, x, y)


def gray_packed(v: MixedVector) -> int:
    """Gray image as a packed big-endian int of alpha + 2*beta bits."""
    lo = _lo_mask(v.beta)
    image = (v.y & (lo << 1)) | (((v.y >> 1) ^ v.y) & lo)
    return (v.x << (2 * v.beta)) | image


def gray_map(v: MixedVector) -> tuple[int, ...]:
    """Binary image under the coordinatewise map 0,1,2,3 -> 00,01,11,10."""
    n = v.alpha + 2 * v.beta
    packed = gray_packed(v)
    return tuple((packed >> (n - 1 - i)) & 1 for i in range(n))


def weight(v: MixedVector) -> int:
    """Hamming weight of the binary part plus Lee weight of the quaternary part."""
    lo = _lo_mask(v.beta)
    ones = v.y & lo
    twos = ((v.y >> 1) & lo) & ~ones
    return v.x.bit_count() + ones.bit_count() + 2 * twos.bit_count()


def p_count(v: MixedVector) -> int:
    """Number of odd (order four) quaternary coordinates."""
    return (v.y & _lo_mask(v.beta)).bit_count()


def binary_inner(u: MixedVector, v: MixedVector) -> int:
    """Standard binary dot product of the binary parts, in Z2."""
    if u.alpha != v.alpha:
        raise ShapeMismatch(f"binary length mismatch: {u.alpha} vs {v.alpha}")
    return (u.x & v.x).bit_count() & 1


def quaternary_inner(u: MixedVector, v: MixedVector) -> int:
    """Standard quaternary dot product of the quaternary parts, in Z4."""
    if u.beta != v.beta:
        raise ShapeMismatch(f"quaternary length mismatch: {u.beta} vs {v.beta}")
    lo = _lo_mask(u.beta)
    ones = (u.y & v.y & lo).bit_count()
    cross = ((((u.y >> 1) & v.y) ^ (u.y & (v.y >> 1))) & lo).bit_count()
    return (ones + 2 * cross) & 3


def inner_product(u: MixedVector, v: MixedVector) -> int:
    """The Z4 pairing 2<x,x'> + <y,y'> used for duality."""
    u._check_shape(v)
    lo = _lo_mask(u.beta)
    ones = (u.y & v.y & lo).bit_count()
    cross = ((((u.y >> 1) & v.y) ^ (u.y & (v.y >> 1))) & lo).bit_count()
    return (2 * (u.x & v.x).bit_count() + ones + 2 * cross) & 3


def double_product(u: MixedVector, v: MixedVector) -> MixedVector:
    """2*u*v on the quaternary part (componentwise), zero binary part."""
    u._check_shape(v)
    lo = _lo_mask(u.beta)
    return MixedVector(u.alpha, u.beta, 0, (u.y & v.y & lo) << 1)
