"""Shadow sets, coset decomposition, pairing table, gluing."""

import pytest

from z2z4codes.classify import SelfDualClass, classify
from z2z4codes.codes import AdditiveCode, GeneratorMatrix, even_weight_subcode
from z2z4codes.construct import catalog, direct_product, ladder_build
from z2z4codes.duality import brute_force_dual, is_self_dual
from z2z4codes.errors import PreconditionError
from z2z4codes.shadow import (
    ORTHOGONALITY_TABLE,
    ShadowDecomposition,
    decompose,
    glue,
    glue_vector_neighbors,
    orthogonality_table,
    shadow,
)
from z2z4codes.vectors import (
    AmbientParams,
    MixedVector,
    all_of,
    ambient_vectors,
    inner_product,
    weight,
)

# C1's shadow: the even coset C0 + s and the odd coset C0 + t + s with
# s = (11|22) and t = (01|11).  The odd-weight words of C1 itself lie in
# the code, never in the shadow.
C1_SHADOW = {
    "11|00",
    "00|20",
    "00|02",
    "11|22",
    "01|13",
    "01|31",
    "10|11",
    "10|33",
}


def lit(values) -> set[str]:
    return {v.literal() for v in values}


class TestShadow:
    def test_c1_exact_set(self):
        assert lit(shadow(catalog("C1").code)) == C1_SHADOW

    def test_size_equals_code_size(self):
        c1 = catalog("C1").code
        assert len(shadow(c1)) == len(c1)

    def test_type_i_shadow_empty(self):
        assert shadow(catalog("C2").code) == frozenset()
        assert shadow(catalog("C3").code) == frozenset()

    def test_non_self_dual_rejected(self):
        zero = AdditiveCode.span(GeneratorMatrix(AmbientParams(2, 2), ()))
        with pytest.raises(PreconditionError):
            shadow(zero)

    def test_shadow_is_union_of_even_dual_minus_code(self):
        c1 = catalog("C1").code
        even = even_weight_subcode(c1)
        expected = brute_force_dual(even).codewords - c1.codewords
        assert shadow(c1) == expected

    def test_closed_under_even_subcode_translation(self):
        c1 = catalog("C1").code
        s = shadow(c1)
        for w in even_weight_subcode(c1).codewords:
            assert all(v + w in s for v in s)

    def test_not_a_subgroup(self):
        # the zero word lies in the code, never in the shadow
        c1 = catalog("C1").code
        s = shadow(c1)
        assert MixedVector.zero(2, 2) not in s
        assert any(u + v not in s for u in s for v in s)


class TestDecompose:
    def test_c1_structure(self):
        d = decompose(catalog("C1").code)
        assert d.s == MixedVector.parse("11|22")
        assert d.t == MixedVector.parse("01|11")
        assert lit(d.c00) == {"00|00", "00|22", "11|02", "11|20"}
        assert d.shadow_set == shadow(catalog("C1").code)

    def test_cosets_partition_even_dual(self):
        c1 = catalog("C1").code
        d = decompose(c1)
        union = d.c00 | d.c10 | d.c01 | d.c11
        assert len(union) == 4 * len(d.c00)
        assert union == brute_force_dual(even_weight_subcode(c1)).codewords

    def test_code_is_first_two_cosets(self):
        c1 = catalog("C1").code
        d = decompose(c1)
        assert d.c00 | d.c10 == c1.codewords

    def test_klein_four_quotient(self):
        d = decompose(catalog("C1").code)
        # every glue vector doubles back into the even subcode
        for g in (d.s, d.t, d.s + d.t):
            assert g + g in d.c00

    def test_weight_parities(self):
        d = decompose(catalog("C1").code)
        assert all(weight(v) % 2 == 0 for v in d.c00 | d.c01)
        assert all(weight(v) % 2 == 1 for v in d.c10 | d.c11)

    def test_type_i_rejected(self):
        with pytest.raises(PreconditionError):
            decompose(catalog("C2").code)

    def test_product_of_type0_codes(self):
        c1 = catalog("C1").code
        d = decompose(direct_product(c1, c1))
        assert len(d.c00) == 32
        assert d.s == all_of(1, 4, 2, 4)


class TestOrthogonalityTable:
    def test_c1_matches_reference_table(self):
        d = decompose(catalog("C1").code)
        assert orthogonality_table(d) == ORTHOGONALITY_TABLE

    def test_reference_entries(self):
        d = decompose(catalog("C1").code)
        table = orthogonality_table(d)
        assert table[0][3] == 0  # c00 x c11
        assert table[1][2] == 2  # c10 x c01
        assert table[3][3] == 0  # c11 x c11

    def test_ladder_type0_codes(self):
        for alpha, beta in ((2, 2), (2, 3), (4, 2)):
            code = ladder_build(alpha, beta, SelfDualClass.TYPE_0)
            assert orthogonality_table(decompose(code)) == ORTHOGONALITY_TABLE

    def test_broken_decomposition_rejected(self):
        d = decompose(catalog("C1").code)
        # corrupt one coset: mix even and odd vectors
        broken = ShadowDecomposition(
            c00=d.c00,
            c10=d.c10,
            c01=frozenset(list(d.c01)[:2] + list(d.c11)[:2]),
            c11=d.c11,
            s=d.s,
            t=d.t,
        )
        with pytest.raises(PreconditionError):
            orthogonality_table(broken)


class TestEvenOrthogonalityCriterion:
    def test_pairing_with_all_one_two_vector(self):
        # <v, (1..1|2..2)> = 2 * weight(v) mod 4, hence zero iff even weight
        for alpha, beta in ((2, 1), (1, 2), (2, 2)):
            s = all_of(1, alpha, 2, beta)
            for v in ambient_vectors(AmbientParams(alpha, beta)):
                assert inner_product(v, s) == (2 * weight(v)) % 4


class TestGlue:
    def test_c1_with_itself(self):
        result = glue(catalog("C1").code, catalog("C1").code)
        code = result.code
        assert (code.ambient.alpha, code.ambient.beta) == (4, 4)
        assert len(code) == 2**6
        assert is_self_dual(code)
        assert brute_force_dual(code) == code
        assert result.variant == "matched"

    def test_type_i_rejected(self):
        with pytest.raises(PreconditionError):
            glue(catalog("C2").code, catalog("C2").code)

    def test_crossed_union_is_also_self_dual_here(self):
        # with the canonical glue vectors both factors share the same
        # pairing table, so the swapped union also verifies
        c1 = catalog("C1").code
        dc = decompose(c1)
        words = set()
        for left, right in (("c00", "c00"), ("c01", "c11"), ("c10", "c10"), ("c11", "c01")):
            words.update(
                u.concat(v) for u in getattr(dc, left) for v in getattr(dc, right)
            )
        crossed = AdditiveCode.from_codewords(AmbientParams(4, 4), words)
        assert is_self_dual(crossed)

    def test_glue_of_distinct_type0_codes(self):
        a = catalog("C1").code
        b = ladder_build(2, 3, SelfDualClass.TYPE_0)
        result = glue(a, b)
        assert is_self_dual(result.code)
        assert (result.code.ambient.alpha, result.code.ambient.beta) == (4, 5)


class TestGlueVectorNeighbors:
    def test_c1_neighbors(self):
        c1 = catalog("C1").code
        even_nb, odd_nb = glue_vector_neighbors(c1)
        d = decompose(c1)
        assert even_nb.codewords == d.c00 | d.c01
        assert odd_nb.codewords == d.c00 | d.c11
        assert is_self_dual(even_nb) and is_self_dual(odd_nb)
        # the even-coset neighbor has even weights only
        assert classify(even_nb) in (SelfDualClass.TYPE_I, SelfDualClass.TYPE_II)
        # the other one is glued through the odd-weight vector t + s, so
        # the neighbor construction forces it to be Type 0
        assert classify(odd_nb) is SelfDualClass.TYPE_0

    def test_both_contain_even_subcode(self):
        c1 = catalog("C1").code
        d = decompose(c1)
        for nb in glue_vector_neighbors(c1):
            assert d.c00 <= nb.codewords
            assert len(nb.codewords & c1.codewords) * 2 == len(c1) * 1

    def test_rejects_non_type0(self):
        with pytest.raises(PreconditionError):
            glue_vector_neighbors(catalog("C5").code)


def test_shadow_vs_enumerator_identity_on_type0_ladder():
    from z2z4codes.enumerators import WeightEnumerator, shadow_we, weight_enumerator

    for alpha, beta in ((2, 2), (4, 2), (2, 3)):
        code = ladder_build(alpha, beta, SelfDualClass.TYPE_0)
        n = code.ambient.n
        direct = WeightEnumerator.from_weights(n, (weight(v) for v in shadow(code)))
        assert shadow_we(weight_enumerator(code)) == direct
