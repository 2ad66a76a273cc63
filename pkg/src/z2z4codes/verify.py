"""Built-in verification suite over the reference catalog.

Each check recomputes one documented property of the catalog codes from
scratch and compares against the frozen expected value.  The CLI's
``verify`` command and the service's ``/verify`` endpoint run this suite
and report one line per check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .classify import (
    AdmissibilityQuery,
    SelfDualClass,
    admissible,
    check_structure_relations,
    classify,
)
from .codes import (
    even_weight_subcode,
    is_antipodal,
    is_separable,
    order_two_subcode,
    puncture_X,
    type_params,
)
from .construct import CATALOG_NAMES, catalog, direct_product, ladder_build, neighbor
from .duality import brute_force_dual, dual, dual_type, is_self_dual
from .enumerators import (
    even_subcode_we,
    format_enumerator,
    gleason_decompose,
    macwilliams,
    shadow_we,
    weight_enumerator,
)
from .errors import NotInRing
from .shadow import ORTHOGONALITY_TABLE, decompose, glue, orthogonality_table, shadow
from .vectors import MixedVector


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _check(name: str, fn: Callable[[], str]) -> CheckResult:
    try:
        detail = fn()
        return CheckResult(name, True, detail)
    except Exception as exc:  # noqa: BLE001 - a failing check must not abort the suite
        return CheckResult(name, False, f"{type(exc).__name__}: {exc}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise AssertionError(message)


def _c1_suite() -> str:
    c1 = catalog("C1").code
    _require(len(c1) == 8, "C1 must have 8 codewords")
    _require(str(type_params(c1)) == "(2, 2; 1, 1; 1)", "C1 type parameters")
    _require(is_self_dual(c1), "C1 self-dual")
    _require(classify(c1) is SelfDualClass.TYPE_0, "C1 class")
    w = format_enumerator(weight_enumerator(c1))
    _require(w == "x^6 + 4*x^3*y^3 + 3*x^2*y^4", f"C1 enumerator {w}")
    return "8 codewords, type (2, 2; 1, 1; 1), Type 0, enumerator exact"


def _c1_shadow_suite() -> str:
    c1 = catalog("C1").code
    w = weight_enumerator(c1)
    even = format_enumerator(even_subcode_we(w))
    _require(even == "x^6 + 3*x^2*y^4", f"even subcode enumerator {even}")
    sh = format_enumerator(shadow_we(w))
    _require(sh == "3*x^4*y^2 + 4*x^3*y^3 + y^6", f"shadow enumerator {sh}")
    s = shadow(c1)
    expected = {
        MixedVector.parse(lit)
        for lit in ("11|00", "00|20", "00|02", "11|22", "01|13", "01|31", "10|11", "10|33")
    }
    _require(s == frozenset(expected), "shadow set (coset-corrected listing)")
    d = decompose(c1)
    _require(s == d.shadow_set, "shadow equals the union of the two glue cosets")
    _require(orthogonality_table(d) == ORTHOGONALITY_TABLE, "coset pairing table")
    return "even/shadow enumerators exact, shadow set and pairing table verified"


def _c2_suite() -> str:
    c2 = catalog("C2").code
    _require(is_self_dual(c2), "C2 self-dual")
    _require(str(type_params(c2)) == "(2, 1; 2, 0; 1)", "C2 type parameters")
    _require(classify(c2) is SelfDualClass.TYPE_I, "C2 class")
    _require(is_separable(c2) and is_antipodal(c2), "C2 separable antipodal")
    return "type (2, 1; 2, 0; 1), Type I, separable, antipodal"


def _c3_c4_suite() -> str:
    for name in ("C3", "C4"):
        code = catalog(name).code
        _require(is_self_dual(code), f"{name} self-dual")
        _require(classify(code) is SelfDualClass.TYPE_I, f"{name} class")
        _require(not is_separable(code), f"{name} non-separable")
        _require(type_params(code).delta >= 1, f"{name} delta >= 1")
    return "C3 and C4 are non-separable Type I with delta >= 1"


def _c5_suite() -> str:
    c5 = catalog("C5").code
    _require(c5.ambient.n == 16, "C5 binary length 16")
    _require(is_self_dual(c5), "C5 self-dual")
    _require(classify(c5) is SelfDualClass.TYPE_II, "C5 class")
    _require(is_separable(c5), "C5 separable")
    gleason_decompose(weight_enumerator(c5), SelfDualClass.TYPE_II)
    return "Hamming8 x D4 is Type II separable with an exact ring decomposition"


def _c6_suite() -> str:
    c6 = catalog("C6").code
    _require(len(c6) == 256, "C6 size 2^8")
    _require(is_self_dual(c6), "C6 self-dual")
    _require(classify(c6) is SelfDualClass.TYPE_II, "C6 class")
    _require(not is_separable(c6), "C6 non-separable")
    return "C6 has 2^8 codewords, Type II, non-separable"


def _catalog_attributes() -> str:
    for name in CATALOG_NAMES:
        entry = catalog(name)
        _require(is_self_dual(entry.code), f"{name} self-dual")
        _require(classify(entry.code) is entry.expected_class, f"{name} class")
        _require(is_separable(entry.code) == entry.expected_separable, f"{name} separability")
        if entry.expected_params is not None:
            _require(type_params(entry.code) == entry.expected_params, f"{name} type")
    return f"{len(CATALOG_NAMES)} catalog entries match their recorded attributes"


def _duality_oracle() -> str:
    for name in CATALOG_NAMES:
        code = catalog(name).code
        d = dual(code)
        _require(d == brute_force_dual(code), f"{name} oracle equality")
        _require(
            len(code) * len(d) == 1 << code.ambient.n, f"{name} size product"
        )
        _require(type_params(d) == dual_type(type_params(code)), f"{name} dual type")
    return "dual() matches the ambient-scan oracle on all catalog codes"


def _order_two_projection() -> str:
    for name in CATALOG_NAMES:
        code = catalog(name).code
        bx = puncture_X(order_two_subcode(code))
        _require(is_self_dual(bx), f"{name}: binary projection of the order-two subcode")
    return "order-two subcode projections are binary self-dual codes"


def _macwilliams_fixed_points() -> str:
    for name in CATALOG_NAMES:
        code = catalog(name).code
        w = weight_enumerator(code)
        _require(macwilliams(w, len(code)) == w, f"{name} MacWilliams fixed point")
    return "MacWilliams transform fixes every catalog enumerator"


def _gleason_rings() -> str:
    for name in CATALOG_NAMES:
        code = catalog(name).code
        cls = classify(code)
        w = weight_enumerator(code)
        gleason_decompose(w, cls)
        if cls is SelfDualClass.TYPE_0:
            for other in (SelfDualClass.TYPE_I, SelfDualClass.TYPE_II):
                try:
                    gleason_decompose(w, other)
                    raise AssertionError(f"{name}: decomposition in {other.value} ring succeeded")
                except NotInRing:
                    pass
    return "every catalog enumerator decomposes exactly in the ring of its class"


def _even_subcode_consistency() -> str:
    for name in CATALOG_NAMES:
        code = catalog(name).code
        direct = weight_enumerator(even_weight_subcode(code))
        via_transform = even_subcode_we(weight_enumerator(code))
        _require(direct == via_transform, f"{name} even subcode enumerator")
    return "even-subcode enumerators agree with the halved transform"


def _structure_relations() -> str:
    for name in CATALOG_NAMES:
        report = check_structure_relations(catalog(name).code)
        _require(report.consistent, f"{name} structure relations")
        if not report.separable:
            _require(report.witness is not None, f"{name} pairing witness")
    return "antipodality/separability/delta relations hold on the catalog"


def _admissibility_residues() -> str:
    _require(admissible(AdmissibilityQuery(8, 4, SelfDualClass.TYPE_II)), "(8,4) Type II")
    _require(not admissible(AdmissibilityQuery(4, 6, SelfDualClass.TYPE_II)), "(4,6) Type II")
    _require(admissible(AdmissibilityQuery(2, 2, SelfDualClass.TYPE_0)), "(2,2) Type 0")
    _require(not admissible(AdmissibilityQuery(3, 2, SelfDualClass.TYPE_0)), "odd alpha")
    _require(
        not admissible(AdmissibilityQuery(2, 3, SelfDualClass.TYPE_I, separable=False)),
        "(2,3) non-separable Type I",
    )
    return "admissibility residues match the existence table"


def _ladder_spot_checks() -> str:
    for alpha, beta, cls, sep in (
        (4, 3, SelfDualClass.TYPE_0, None),
        (2, 1, SelfDualClass.TYPE_I, True),
        (6, 4, SelfDualClass.TYPE_I, False),
        (8, 8, SelfDualClass.TYPE_II, False),
    ):
        code = ladder_build(alpha, beta, cls, sep)
        _require(classify(code) is cls, f"ladder ({alpha},{beta}) class")
        _require((code.ambient.alpha, code.ambient.beta) == (alpha, beta), "ladder shape")
    return "ladder constructions hit the requested shapes and classes"


def _neighbor_and_glue() -> str:
    c1 = catalog("C1").code
    nb = neighbor(c1, MixedVector.parse("11|22"))
    _require(is_self_dual(nb), "neighbor self-dual")
    _require(classify(nb) is not SelfDualClass.TYPE_0, "neighbor class")
    glued = glue(c1, c1)
    _require(is_self_dual(glued.code), "glue self-dual")
    _require(len(glued.code) == 64, "glue size")
    _require(glued.code == brute_force_dual(glued.code), "glue oracle")
    return "neighbor through (11|22) and glue(C1, C1) verified against the oracle"


def _product_types() -> str:
    c1 = catalog("C1").code
    sq = direct_product(c1, c1)
    _require(str(type_params(sq)) == "(4, 4; 2, 2; 2)", "C1 x C1 type")
    _require(classify(sq) is SelfDualClass.TYPE_0, "C1 x C1 class")
    return "type parameters add componentwise under products"


CHECKS: tuple[tuple[str, Callable[[], str]], ...] = (
    ("catalog-C1", _c1_suite),
    ("catalog-C2", _c2_suite),
    ("catalog-C3-C4", _c3_c4_suite),
    ("catalog-C5", _c5_suite),
    ("catalog-C6", _c6_suite),
    ("catalog-C1-shadow", _c1_shadow_suite),
    ("catalog-attributes", _catalog_attributes),
    ("duality-oracle", _duality_oracle),
    ("order-two-projection", _order_two_projection),
    ("macwilliams-fixed-points", _macwilliams_fixed_points),
    ("gleason-rings", _gleason_rings),
    ("even-subcode-consistency", _even_subcode_consistency),
    ("structure-relations", _structure_relations),
    ("admissibility-residues", _admissibility_residues),
    ("ladder-spot-checks", _ladder_spot_checks),
    ("neighbor-and-glue", _neighbor_and_glue),
    ("product-types", _product_types),
)


@dataclass(frozen=True)
class VerificationResult:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "ok " if c.passed else "FAIL"
            out.append(f"{mark} {c.name}: {c.detail}")
        out.append(f"{self.passed}/{len(self.checks)} checks passed")
        return out


def run_verification() -> VerificationResult:
    return VerificationResult(tuple(_check(name, fn) for name, fn in CHECKS))
