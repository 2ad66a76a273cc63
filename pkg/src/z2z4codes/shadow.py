"""Even-subcode coset structure of Type 0 codes and the gluing construction.

A Type 0 code C splits over its even-weight subcode C0 into four cosets
C_ij = C0 + i*t + j*s, where t is an odd-weight codeword and s the
all-one/all-two vector.  The shadow is the set difference C0-dual minus
C, equal to the union of the two j = 1 cosets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .classify import SelfDualClass, classify
from .codes import (
    DEFAULT_AMBIENT_GUARD,
    AdditiveCode,
    check_guard,
    even_weight_subcode,
)
from .duality import brute_force_dual, is_self_dual
from .errors import PreconditionError
from .vectors import AmbientParams, MixedVector, all_of, inner_product, weight

# Expected pairing value between cosets, indexed (i*t + j*s) x (k*t + l*s).
ORTHOGONALITY_TABLE = (
    (0, 0, 0, 0),
    (0, 0, 2, 2),
    (0, 2, 0, 2),
    (0, 2, 2, 0),
)

COSET_LABELS = ("c00", "c10", "c01", "c11")


@dataclass(frozen=True)
class ShadowDecomposition:
    """The four cosets of the even subcode inside its dual, with glue vectors."""

    c00: frozenset[MixedVector]
    c10: frozenset[MixedVector]
    c01: frozenset[MixedVector]
    c11: frozenset[MixedVector]
    s: MixedVector
    t: MixedVector

    @property
    def cosets(self) -> tuple[frozenset[MixedVector], ...]:
        return (self.c00, self.c10, self.c01, self.c11)

    @property
    def shadow_set(self) -> frozenset[MixedVector]:
        return self.c01 | self.c11


def _require_type0(code: AdditiveCode) -> None:
    cls = classify(code)
    if cls is SelfDualClass.NOT_SELF_DUAL:
        raise PreconditionError("shadow structure needs a self-dual code")
    if cls is not SelfDualClass.TYPE_0:
        raise PreconditionError(f"shadow structure needs a Type 0 code, got {cls.value}")


def shadow(code: AdditiveCode, *, max_n: int = DEFAULT_AMBIENT_GUARD) -> frozenset[MixedVector]:
    """Shadow set: dual of the even subcode minus the code itself.

    For Type I/II codes the even subcode is the whole code, so this
    difference is empty.
    """
    if not is_self_dual(code):
        raise PreconditionError("shadow needs a self-dual code")
    even = even_weight_subcode(code)
    if len(even) == len(code):
        return frozenset()
    dual_even = brute_force_dual(even, max_n=max_n)
    return frozenset(dual_even.codewords - code.codewords)


def decompose(code: AdditiveCode) -> ShadowDecomposition:
    """Split a Type 0 code and its even-subcode dual into the four cosets.

    s is the all-one/all-two vector; t is the lexicographically least
    odd-weight codeword.  All structural invariants are verified.
    """
    _require_type0(code)
    even = even_weight_subcode(code)
    c0 = even.codewords
    if 2 * len(c0) != len(code):
        raise AssertionError("even subcode does not have index 2")  # pragma: no cover
    s = all_of(1, code.ambient.alpha, 2, code.ambient.beta)
    t = min((w for w in code.codewords if weight(w) % 2 == 1), key=MixedVector.sort_key)
    c10 = frozenset(w + t for w in c0)
    c01 = frozenset(w + s for w in c0)
    c11 = frozenset(w + t + s for w in c0)
    d = ShadowDecomposition(frozenset(c0), c10, c01, c11, s, t)
    _verify_decomposition(code, even, d)
    return d


def _verify_decomposition(code: AdditiveCode, even: AdditiveCode, d: ShadowDecomposition) -> None:
    if d.c00 | d.c10 != code.codewords:
        raise AssertionError("c00 and c10 do not partition the code")
    union = d.c00 | d.c10 | d.c01 | d.c11
    if len(union) != 4 * len(d.c00):
        raise AssertionError("cosets are not disjoint")
    # The union is the dual of the even subcode: sizes match and every
    # glue vector pairs to zero with all of its generators.
    n = code.ambient.n
    if len(union) * len(d.c00) != 1 << n:
        raise AssertionError("coset union has the wrong size for the even dual")
    for g in even.generators.rows:
        for glue in (d.s, d.t):
            if inner_product(g, glue) != 0:
                raise AssertionError("glue vector is not orthogonal to the even subcode")
    if inner_product(d.s, d.t) != 2 or inner_product(d.s, d.s) != 0 or inner_product(d.t, d.t) != 0:
        raise AssertionError("glue vectors have the wrong pairings")
    if weight(d.s) % 2 != 0 or weight(d.t) % 2 != 1:
        raise AssertionError("glue vectors have the wrong weight parity")


def orthogonality_table(d: ShadowDecomposition) -> tuple[tuple[int, ...], ...]:
    """Pairing value between each pair of cosets, verified to be constant."""
    table = []
    for a, coset_a in enumerate(d.cosets):
        row = []
        for b, coset_b in enumerate(d.cosets):
            values = {inner_product(u, v) for u in coset_a for v in coset_b}
            if len(values) != 1:
                raise PreconditionError(
                    f"pairing between {COSET_LABELS[a]} and {COSET_LABELS[b]}"
                    f" is not constant: {sorted(values)}"
                )
            row.append(values.pop())
        table.append(tuple(row))
    return tuple(table)


@dataclass(frozen=True)
class GlueResult:
    code: AdditiveCode
    variant: str  # "matched" or "crossed"


def glue(
    c: AdditiveCode, d: AdditiveCode, *, max_n: int = DEFAULT_AMBIENT_GUARD
) -> GlueResult:
    """Join two Type 0 codes along their coset structure.

    Tries the coset-aligned union first, then the variant with the two
    shadow cosets of the second factor exchanged; returns whichever is
    self-dual in the combined ambient.
    """
    dc = decompose(c)
    dd = decompose(d)
    ambient = AmbientParams(
        c.ambient.alpha + d.ambient.alpha, c.ambient.beta + d.ambient.beta
    )
    check_guard(ambient, max_n)
    pairings = {
        "matched": (("c00", "c00"), ("c01", "c01"), ("c10", "c10"), ("c11", "c11")),
        "crossed": (("c00", "c00"), ("c01", "c11"), ("c10", "c10"), ("c11", "c01")),
    }
    for variant, pairs in pairings.items():
        words = set()
        for left, right in pairs:
            part_c = getattr(dc, left)
            part_d = getattr(dd, right)
            words.update(u.concat(v) for u in part_c for v in part_d)
        try:
            joined = AdditiveCode.from_codewords(ambient, words, max_n=max_n)
        except ValueError:
            continue
        if is_self_dual(joined):
            return GlueResult(joined, variant)
    raise PreconditionError("neither glue variant is self-dual: inconsistent decompositions")


def glue_vector_neighbors(code: AdditiveCode) -> tuple[AdditiveCode, AdditiveCode]:
    """The two self-dual neighbors c00|c01 and c00|c11 of a Type 0 code.

    Both contain the even subcode and share it with the input as an
    index-2 subgroup.  The first joins the even shadow coset, so it has
    only even weights and is never Type 0; the second joins through the
    odd-weight vector t + s and therefore always classifies as Type 0,
    as the neighbor construction predicts for an odd-weight vector.
    """
    d = decompose(code)
    out = []
    for half in (d.c01, d.c11):
        cand = AdditiveCode.from_codewords(code.ambient, d.c00 | half)
        if not is_self_dual(cand):
            raise AssertionError("neighbor through glue vectors is not self-dual")
        out.append(cand)
    if classify(out[0]) is SelfDualClass.TYPE_0:
        raise AssertionError("even-coset neighbor cannot be Type 0")
    return (out[0], out[1])
