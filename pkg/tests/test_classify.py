"""Class assignment, admissible shapes and structure relations."""

import pytest

from z2z4codes.classify import (
    AdmissibilityQuery,
    SelfDualClass,
    admissible,
    check_structure_relations,
    classify,
    find_pairing_witness,
    gray_image_linear,
)
from z2z4codes.codes import (
    AdditiveCode,
    GeneratorMatrix,
    is_separable,
    puncture_X,
)
from z2z4codes.construct import catalog, direct_product
from z2z4codes.errors import PreconditionError
from z2z4codes.vectors import AmbientParams, MixedVector, binary_inner, gray_packed, quaternary_inner, weight


class TestClassify:
    def test_reference_classes(self):
        assert classify(catalog("C1").code) is SelfDualClass.TYPE_0
        assert classify(catalog("C2").code) is SelfDualClass.TYPE_I
        assert classify(catalog("C6").code) is SelfDualClass.TYPE_II

    def test_not_self_dual(self):
        zero = AdditiveCode.span(GeneratorMatrix(AmbientParams(2, 1), ()))
        assert classify(zero) is SelfDualClass.NOT_SELF_DUAL

    def test_weight_residues(self):
        for name, cls in (("C1", SelfDualClass.TYPE_0), ("C3", SelfDualClass.TYPE_I), ("C5", SelfDualClass.TYPE_II)):
            weights = [weight(w) for w in catalog(name).code.codewords]
            if cls is SelfDualClass.TYPE_0:
                assert any(w % 2 for w in weights)
            elif cls is SelfDualClass.TYPE_I:
                assert all(w % 2 == 0 for w in weights)
                assert any(w % 4 for w in weights)
            else:
                assert all(w % 4 == 0 for w in weights)

    def test_pure_codes_use_same_rule(self):
        assert classify(catalog("Hamming8").code) is SelfDualClass.TYPE_II
        assert classify(catalog("Gprime").code) is SelfDualClass.TYPE_I
        assert classify(catalog("Gdoubleprime").code) is SelfDualClass.TYPE_I

    def test_type_ii_length_multiple_of_eight(self):
        for name in ("C5", "C6", "Hamming8", "D4"):
            code = catalog(name).code
            assert classify(code) is SelfDualClass.TYPE_II
            assert code.ambient.n % 8 == 0

    def test_parse_labels(self):
        assert SelfDualClass.parse("Type0") is SelfDualClass.TYPE_0
        assert SelfDualClass.parse("type i") is SelfDualClass.TYPE_I
        assert SelfDualClass.parse("TypeII") is SelfDualClass.TYPE_II
        with pytest.raises(PreconditionError):
            SelfDualClass.parse("TypeIII")


# Independent restatement of the existence table used as the oracle.
def table_oracle(alpha: int, beta: int, cls: SelfDualClass, separable: bool) -> bool:
    if cls is SelfDualClass.TYPE_0:
        return not separable and alpha % 2 == 0 and alpha >= 2 and beta >= 2
    if cls is SelfDualClass.TYPE_I and separable:
        return alpha % 2 == 0 and alpha >= 2 and beta >= 1
    if cls is SelfDualClass.TYPE_I:
        return alpha % 2 == 0 and alpha >= 4 and beta >= 4
    if separable:
        return alpha % 8 == 0 and alpha >= 8 and beta % 4 == 0 and beta >= 4
    return alpha % 8 == 0 and alpha >= 8 and beta % 4 == 0 and beta >= 4


class TestAdmissible:
    def test_reference_queries(self):
        assert admissible(AdmissibilityQuery(8, 4, SelfDualClass.TYPE_II))
        assert not admissible(AdmissibilityQuery(4, 6, SelfDualClass.TYPE_II))
        assert admissible(AdmissibilityQuery(2, 2, SelfDualClass.TYPE_0))

    def test_full_grid_against_table(self):
        for alpha in range(1, 14):
            for beta in range(1, 10):
                for cls in (SelfDualClass.TYPE_0, SelfDualClass.TYPE_I, SelfDualClass.TYPE_II):
                    for sep in (True, False):
                        if cls is SelfDualClass.TYPE_0 and sep:
                            continue
                        got = admissible(AdmissibilityQuery(alpha, beta, cls, sep))
                        assert got == table_oracle(alpha, beta, cls, sep), (alpha, beta, cls, sep)

    def test_unset_separability_is_any_variant(self):
        assert admissible(AdmissibilityQuery(2, 1, SelfDualClass.TYPE_I))
        assert not admissible(AdmissibilityQuery(2, 4, SelfDualClass.TYPE_I, separable=False))
        assert admissible(AdmissibilityQuery(2, 4, SelfDualClass.TYPE_I))

    def test_monotone_ladder_steps(self):
        cases = (
            (SelfDualClass.TYPE_0, None, 2, 1),
            (SelfDualClass.TYPE_I, True, 2, 1),
            (SelfDualClass.TYPE_I, False, 2, 1),
            (SelfDualClass.TYPE_II, None, 8, 4),
        )
        for cls, sep, step_a, step_b in cases:
            for alpha in range(1, 13):
                for beta in range(1, 9):
                    if admissible(AdmissibilityQuery(alpha, beta, cls, sep)):
                        assert admissible(AdmissibilityQuery(alpha + step_a, beta, cls, sep))
                        assert admissible(AdmissibilityQuery(alpha, beta + step_b, cls, sep))

    def test_type0_separable_rejected(self):
        with pytest.raises(PreconditionError):
            AdmissibilityQuery(2, 2, SelfDualClass.TYPE_0, separable=True)

    def test_both_zero_rejected(self):
        with pytest.raises(PreconditionError):
            AdmissibilityQuery(0, 0, SelfDualClass.TYPE_I)

    def test_pure_shapes_use_residues_only(self):
        assert admissible(AdmissibilityQuery(2, 0, SelfDualClass.TYPE_I))
        assert not admissible(AdmissibilityQuery(3, 0, SelfDualClass.TYPE_I))
        assert admissible(AdmissibilityQuery(0, 4, SelfDualClass.TYPE_II))
        assert not admissible(AdmissibilityQuery(0, 3, SelfDualClass.TYPE_II))
        assert admissible(AdmissibilityQuery(8, 0, SelfDualClass.TYPE_II))
        assert not admissible(AdmissibilityQuery(4, 0, SelfDualClass.TYPE_II))


class TestStructureRelations:
    def test_c1_consistent_non_antipodal(self):
        report = check_structure_relations(catalog("C1").code)
        assert report.cls is SelfDualClass.TYPE_0
        assert not report.antipodal and report.consistent

    def test_c5_separable_implies_antipodal(self):
        report = check_structure_relations(catalog("C5").code)
        assert report.separable and report.antipodal and report.consistent

    def test_c3_delta_and_witness(self):
        report = check_structure_relations(catalog("C3").code)
        assert not report.separable and report.delta >= 1
        u, w = report.witness
        assert binary_inner(u, w) == 1 and quaternary_inner(u, w) == 2

    def test_all_catalog_consistent(self):
        for name in ("C1", "C2", "C3", "C4", "C5", "C6"):
            assert check_structure_relations(catalog(name).code).consistent

    def test_rejects_non_self_dual(self):
        zero = AdditiveCode.span(GeneratorMatrix(AmbientParams(2, 1), ()))
        with pytest.raises(PreconditionError):
            check_structure_relations(zero)

    def test_witness_only_for_non_separable(self):
        assert find_pairing_witness(catalog("C2").code) is None
        assert find_pairing_witness(catalog("C6").code) is not None

    def test_antipodal_gray_image_closed_under_complement(self):
        code = catalog("C2").code
        n = code.ambient.n
        image = {gray_packed(w) for w in code.codewords}
        ones = (1 << n) - 1
        assert all(g ^ ones in image for g in image)


class TestGrayImageLinearity:
    def test_order_two_code_linear(self):
        # delta = 0: the Gray map is additive on order-two words
        assert gray_image_linear(catalog("C2").code)
        assert gray_image_linear(catalog("Hamming8").code)

    def test_full_ambient_linear(self):
        rows = [MixedVector.parse(x) for x in ("10|0", "01|0", "00|1")]
        code = AdditiveCode.span(GeneratorMatrix(AmbientParams(2, 1), tuple(rows)))
        assert len(code) == 16 and gray_image_linear(code)

    def test_c5_conditional_self_duality(self):
        code = catalog("C5").code
        if gray_image_linear(code):
            image = {gray_packed(w) for w in code.codewords}
            n = code.ambient.n
            # binary self-dual and doubly-even
            assert len(image) ** 2 == 1 << n
            assert all((u & w).bit_count() % 2 == 0 for u in image for w in image)
            assert all(u.bit_count() % 4 == 0 for u in image)

    def test_nonlinear_example(self):
        # span of (011), (101) over Z4^3: 2*u*v = (002) is not a codeword
        rows = (MixedVector.parse("|011"), MixedVector.parse("|101"))
        code = AdditiveCode.span(GeneratorMatrix(AmbientParams(0, 3), rows))
        assert not gray_image_linear(code)

    def test_catalog_images_all_linear(self):
        for name in ("C1", "C2", "C3", "C4", "C5", "C6", "D4"):
            assert gray_image_linear(catalog(name).code), name


def test_type_ii_linear_images_are_doubly_even_self_dual():
    for name in ("C5", "C6", "D4", "Hamming8"):
        code = catalog(name).code
        if classify(code) is SelfDualClass.TYPE_II and gray_image_linear(code):
            image = {gray_packed(w) for w in code.codewords}
            n = code.ambient.n
            assert len(image) ** 2 == 1 << n
            assert all((u & w).bit_count() % 2 == 0 for u in image for w in image)
            assert all(u.bit_count() % 4 == 0 for u in image)


def test_doubly_even_projection_implies_separable():
    for name in ("C1", "C2", "C3", "C4", "C5", "C6"):
        code = catalog(name).code
        cx = puncture_X(code)
        if all(weight(w) % 4 == 0 for w in cx.codewords):
            assert is_separable(code), name


def test_product_of_type0_is_type0():
    c1 = catalog("C1").code
    assert classify(direct_product(c1, c1)) is SelfDualClass.TYPE_0
