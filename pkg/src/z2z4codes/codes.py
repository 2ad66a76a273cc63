"""Additive codes: span enumeration, group parameters and subcodes.

A code is the additive closure of a set of generator rows inside
Z2^alpha x Z4^beta.  Binary and quaternary linear codes are the special
cases beta = 0 and alpha = 0 of the same class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import GuardExceeded
from .vectors import AmbientParams, MixedVector, all_of, weight

# Enumeration is exact and exhaustive, so refuse ambients beyond desk scale.
DEFAULT_AMBIENT_GUARD = 32


def check_guard(ambient: AmbientParams, max_n: int) -> None:
    if ambient.n > max_n:
        raise GuardExceeded(
            f"ambient binary length {ambient.n} exceeds the enumeration guard {max_n}"
        )


@dataclass(frozen=True, slots=True)
class GeneratorMatrix:
    """Ordered list of generator rows over a fixed ambient shape."""

    ambient: AmbientParams
    rows: tuple[MixedVector, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if (row.alpha, row.beta) != (self.ambient.alpha, self.ambient.beta):
                raise ValueError(f"row {row} does not match ambient {self.ambient}")

    @classmethod
    def from_literals(cls, alpha: int, beta: int, literals: list[str]) -> "GeneratorMatrix":
        rows = tuple(MixedVector.parse(s) for s in literals)
        return cls(AmbientParams(alpha, beta), rows)


@dataclass(frozen=True, slots=True)
class TypeParams:
    """Group structure (alpha, beta; gamma, delta; kappa) of a code."""

    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta}; {self.gamma}, {self.delta}; {self.kappa})"

    @property
    def size(self) -> int:
        return 1 << (self.gamma + 2 * self.delta)


def _join_subgroup(words: set[MixedVector], g: MixedVector) -> set[MixedVector]:
    """Smallest subgroup containing the subgroup `words` and the vector g."""
    joined = set(words)
    cur = g
    while cur not in words:
        joined.update(w + cur for w in words)
        cur = cur + g
    return joined


class AdditiveCode:
    """Immutable additive code with its full codeword set enumerated."""

    __slots__ = ("ambient", "generators", "codewords", "__dict__")

    def __init__(self, generators: GeneratorMatrix, codewords: frozenset[MixedVector]):
        self.ambient = generators.ambient
        self.generators = generators
        self.codewords = codewords

    @classmethod
    def span(
        cls, generators: GeneratorMatrix, *, max_n: int = DEFAULT_AMBIENT_GUARD
    ) -> "AdditiveCode":
        """Additive closure of the generator rows."""
        check_guard(generators.ambient, max_n)
        words = {MixedVector.zero(generators.ambient.alpha, generators.ambient.beta)}
        for g in generators.rows:
            if g not in words:
                words = _join_subgroup(words, g)
        return cls(generators, frozenset(words))

    @classmethod
    def from_codewords(
        cls,
        ambient: AmbientParams,
        words,
        *,
        max_n: int = DEFAULT_AMBIENT_GUARD,
        check: bool = True,
    ) -> "AdditiveCode":
        """Build a code from an explicit codeword set, deriving generators.

        With check=True the set is verified to be an additive subgroup.
        """
        check_guard(ambient, max_n)
        words = frozenset(words)
        gens: list[MixedVector] = []
        spanned = {MixedVector.zero(ambient.alpha, ambient.beta)}
        for w in sorted(words, key=MixedVector.sort_key):
            if w not in spanned:
                gens.append(w)
                spanned = _join_subgroup(spanned, w)
        if check and len(spanned) != len(words):
            raise ValueError("codeword set is not closed under addition")
        return cls(GeneratorMatrix(ambient, tuple(gens)), frozenset(spanned))

    def __contains__(self, v: MixedVector) -> bool:
        return v in self.codewords

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return self.ambient == other.ambient and self.codewords == other.codewords

    def __hash__(self) -> int:
        return hash((self.ambient, self.codewords))

    def __repr__(self) -> str:
        a = self.ambient
        return f"AdditiveCode(alpha={a.alpha}, beta={a.beta}, size={len(self.codewords)})"

    @cached_property
    def sorted_codewords(self) -> tuple[MixedVector, ...]:
        return tuple(sorted(self.codewords, key=MixedVector.sort_key))


def span(generators: GeneratorMatrix, *, max_n: int = DEFAULT_AMBIENT_GUARD) -> AdditiveCode:
    return AdditiveCode.span(generators, max_n=max_n)


def _gf2_rank(rows: list[int]) -> int:
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
    return len(pivots)


def order_two_subcode(code: AdditiveCode) -> AdditiveCode:
    """Subcode of all codewords of order at most two."""
    words = frozenset(w for w in code.codewords if w.order() <= 2)
    return AdditiveCode.from_codewords(code.ambient, words, check=False)


def even_weight_subcode(code: AdditiveCode) -> AdditiveCode:
    """Subcode of even-weight codewords; index 1 or 2 in the code."""
    words = frozenset(w for w in code.codewords if weight(w) % 2 == 0)
    return AdditiveCode.from_codewords(code.ambient, words, check=False)


def type_params(code: AdditiveCode) -> TypeParams:
    """Group parameters (gamma, delta) and the binary projection rank kappa."""
    order2 = [w for w in code.codewords if w.order() <= 2]
    total = len(code.codewords)
    bsize = len(order2)
    # |C| = 2^(gamma+2delta), |order-two subcode| = 2^(gamma+delta)
    gamma = (bsize * bsize // total).bit_length() - 1
    delta = (total // bsize).bit_length() - 1
    kappa = _gf2_rank([w.x for w in order2])
    return TypeParams(code.ambient.alpha, code.ambient.beta, gamma, delta, kappa)


def puncture_X(code: AdditiveCode) -> AdditiveCode:
    """Projection onto the binary coordinates, as a beta = 0 code."""
    alpha = code.ambient.alpha
    words = frozenset(MixedVector(alpha, 0, w.x, 0) for w in code.codewords)
    return AdditiveCode.from_codewords(AmbientParams(alpha, 0), words, check=False)


def puncture_Y(code: AdditiveCode) -> AdditiveCode:
    """Projection onto the quaternary coordinates, as an alpha = 0 code."""
    beta = code.ambient.beta
    words = frozenset(MixedVector(0, beta, 0, w.y) for w in code.codewords)
    return AdditiveCode.from_codewords(AmbientParams(0, beta), words, check=False)


def x_kernel_dimension(code: AdditiveCode) -> int:
    """Rank of the binary parts of codewords with zero quaternary part.

    Every word of the quaternary projection is hit 2^r times, r this rank.
    """
    return _gf2_rank([w.x for w in code.codewords if w.y == 0])


def is_separable(code: AdditiveCode) -> bool:
    """True when the code equals the product of its two projections."""
    xs = {w.x for w in code.codewords}
    ys = {w.y for w in code.codewords}
    return len(code.codewords) == len(xs) * len(ys)


def is_antipodal(code: AdditiveCode) -> bool:
    """True when (1...1 | 2...2) is a codeword."""
    return all_of(1, code.ambient.alpha, 2, code.ambient.beta) in code.codewords
