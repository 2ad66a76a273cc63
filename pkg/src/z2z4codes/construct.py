"""Constructions: direct products, the existence ladder, neighbors, catalog."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classify import SelfDualClass, classify
from .codes import (
    DEFAULT_AMBIENT_GUARD,
    AdditiveCode,
    GeneratorMatrix,
    TypeParams,
    check_guard,
    is_separable,
)
from .duality import is_self_dual
from .errors import PreconditionError
from .vectors import AmbientParams, MixedVector, ambient_vectors, inner_product, weight


def direct_product(
    c: AdditiveCode, d: AdditiveCode, *, max_n: int = DEFAULT_AMBIENT_GUARD
) -> AdditiveCode:
    """Concatenation product: binary parts adjacent, quaternary parts adjacent.

    Type parameters add componentwise and self-duality is preserved.
    """
    ambient = AmbientParams(
        c.ambient.alpha + d.ambient.alpha, c.ambient.beta + d.ambient.beta
    )
    check_guard(ambient, max_n)
    zero_c = MixedVector.zero(c.ambient.alpha, c.ambient.beta)
    zero_d = MixedVector.zero(d.ambient.alpha, d.ambient.beta)
    gens = tuple(g.concat(zero_d) for g in c.generators.rows) + tuple(
        zero_c.concat(g) for g in d.generators.rows
    )
    words = frozenset(u.concat(v) for u in c.codewords for v in d.codewords)
    return AdditiveCode(GeneratorMatrix(ambient, gens), words)


@dataclass(frozen=True)
class CatalogEntry:
    """A built-in reference code with its expected attributes."""

    name: str
    code: AdditiveCode
    expected_params: TypeParams | None
    expected_class: SelfDualClass
    expected_separable: bool


_CATALOG_LITERALS: dict[str, tuple[int, int, list[str]]] = {
    "C1": (2, 2, ["11|20", "01|11"]),
    "C2": (2, 1, ["11|0", "00|2"]),
    "C3": (4, 4, ["1111|0000", "0101|2000", "0101|0200", "0101|0020", "0011|1111"]),
    "C4": (
        4,
        6,
        ["1111|000000", "0101|220000", "0000|202000", "0101|000200", "0101|111010", "0011|101101"],
    ),
    "C6": (
        8,
        4,
        [
            "10010110|0000",
            "01001110|0000",
            "00100111|0000",
            "00000110|2000",
            "00000110|0200",
            "00000110|0020",
            "00011011|1111",
        ],
    ),
    "Gprime": (2, 0, ["11|"]),
    "Gdoubleprime": (0, 1, ["|2"]),
    "Hamming8": (8, 0, ["10000111|", "01001011|", "00101101|", "00011110|"]),
    "D4": (0, 4, ["|2200", "|2020", "|1111"]),
    "Eq7": (0, 4, ["|2200", "|2020", "|1111"]),
}

_CATALOG_EXPECTED: dict[str, tuple[TypeParams | None, SelfDualClass, bool]] = {
    "C1": (TypeParams(2, 2, 1, 1, 1), SelfDualClass.TYPE_0, False),
    "C2": (TypeParams(2, 1, 2, 0, 1), SelfDualClass.TYPE_I, True),
    "C3": (None, SelfDualClass.TYPE_I, False),
    "C4": (None, SelfDualClass.TYPE_I, False),
    "C5": (TypeParams(8, 4, 6, 1, 4), SelfDualClass.TYPE_II, True),
    "C6": (TypeParams(8, 4, 6, 1, 4), SelfDualClass.TYPE_II, False),
    "Gprime": (TypeParams(2, 0, 1, 0, 1), SelfDualClass.TYPE_I, True),
    "Gdoubleprime": (TypeParams(0, 1, 1, 0, 0), SelfDualClass.TYPE_I, True),
    "Hamming8": (TypeParams(8, 0, 4, 0, 4), SelfDualClass.TYPE_II, True),
    "D4": (TypeParams(0, 4, 2, 1, 0), SelfDualClass.TYPE_II, True),
    "Eq7": (TypeParams(0, 4, 2, 1, 0), SelfDualClass.TYPE_II, True),
}

CATALOG_NAMES = ("C1", "C2", "C3", "C4", "C5", "C6", "Gprime", "Gdoubleprime", "Hamming8", "D4", "Eq7")


@lru_cache(maxsize=None)
def catalog(name: str) -> CatalogEntry:
    """Fetch a built-in reference code by name; C5 is Hamming8 x D4."""
    if name not in CATALOG_NAMES:
        raise PreconditionError(f"unknown catalog name {name!r}; known: {', '.join(CATALOG_NAMES)}")
    if name == "C5":
        code = direct_product(catalog("Hamming8").code, catalog("D4").code)
    else:
        alpha, beta, literals = _CATALOG_LITERALS[name]
        code = AdditiveCode.span(GeneratorMatrix.from_literals(alpha, beta, literals))
    params, cls, separable = _CATALOG_EXPECTED[name]
    return CatalogEntry(name, code, params, cls, separable)


def _power(base: AdditiveCode, count: int, *, max_n: int) -> AdditiveCode | None:
    out: AdditiveCode | None = None
    for _ in range(count):
        out = base if out is None else direct_product(out, base, max_n=max_n)
    return out


def _extend(code: AdditiveCode, step: AdditiveCode, count: int, *, max_n: int) -> AdditiveCode:
    for _ in range(count):
        code = direct_product(code, step, max_n=max_n)
    return code


def ladder_build(
    alpha: int,
    beta: int,
    cls: SelfDualClass,
    separable: bool | None = None,
    *,
    max_n: int = DEFAULT_AMBIENT_GUARD,
) -> AdditiveCode:
    """Construct a self-dual code of the requested shape and class.

    Bases C1/C2/C3/C5/C6 are extended by products with the length-2
    binary and length-1 quaternary steps (Type 0/I), or with Hamming8
    and the length-4 quaternary block (Type II).  The result is verified
    before being returned.
    """
    from .classify import AdmissibilityQuery, admissible

    if separable is None:
        variants = [False] if cls is SelfDualClass.TYPE_0 else [True, False]
        for variant in variants:
            if admissible(AdmissibilityQuery(alpha, beta, cls, variant)):
                separable = variant
                break
        else:
            rules = " / ".join(
                _residue_message(alpha, beta, cls, variant) for variant in variants
            )
            raise PreconditionError(rules)
    query = AdmissibilityQuery(alpha, beta, cls, separable)
    if not admissible(query):
        raise PreconditionError(_residue_message(alpha, beta, cls, separable))

    if alpha == 0 or beta == 0:
        code = _pure_build(alpha, beta, cls, max_n=max_n)
    else:
        bases = {
            (SelfDualClass.TYPE_0, False): "C1",
            (SelfDualClass.TYPE_I, True): "C2",
            (SelfDualClass.TYPE_I, False): "C3",
            (SelfDualClass.TYPE_II, True): "C5",
            (SelfDualClass.TYPE_II, False): "C6",
        }
        base = catalog(bases[(cls, separable)]).code
        a_step = alpha - base.ambient.alpha
        b_step = beta - base.ambient.beta
        if cls is SelfDualClass.TYPE_II:
            code = _extend(base, catalog("Hamming8").code, a_step // 8, max_n=max_n)
            code = _extend(code, catalog("Eq7").code, b_step // 4, max_n=max_n)
        else:
            code = _extend(base, catalog("Gprime").code, a_step // 2, max_n=max_n)
            code = _extend(code, catalog("Gdoubleprime").code, b_step, max_n=max_n)

    if not is_self_dual(code) or classify(code) is not cls:
        raise AssertionError("ladder construction produced an unexpected code")
    if alpha and beta and is_separable(code) != separable:
        raise AssertionError("ladder construction produced the wrong separability")
    return code


def _pure_build(alpha: int, beta: int, cls: SelfDualClass, *, max_n: int) -> AdditiveCode:
    """Self-dual codes on a pure binary or pure quaternary ambient."""
    if cls is SelfDualClass.TYPE_0:
        raise PreconditionError(
            "no Type 0 code exists with alpha = 0 or beta = 0: every"
            " self-orthogonal word then has even weight"
        )
    if beta == 0:
        if cls is SelfDualClass.TYPE_I:
            code = _power(catalog("Gprime").code, alpha // 2, max_n=max_n)
        else:
            code = _power(catalog("Hamming8").code, alpha // 8, max_n=max_n)
    else:
        if cls is SelfDualClass.TYPE_I:
            code = _power(catalog("Gdoubleprime").code, beta, max_n=max_n)
        else:
            code = _power(catalog("D4").code, beta // 4, max_n=max_n)
    if code is None:
        raise PreconditionError("empty ambient")
    return code


def _residue_message(alpha: int, beta: int, cls: SelfDualClass, separable: bool) -> str:
    if cls is SelfDualClass.TYPE_II:
        rule = "alpha = 8 + 8a and beta = 4 + 4b"
    elif cls is SelfDualClass.TYPE_I and separable:
        rule = "alpha = 2 + 2a and beta = 1 + b"
    elif cls is SelfDualClass.TYPE_I:
        rule = "alpha = 4 + 2a and beta = 4 + b"
    else:
        rule = "alpha = 2 + 2a and beta = 2 + b"
    kind = "separable" if separable else "non-separable"
    return (
        f"alpha={alpha}, beta={beta} violates the {kind} {cls.value}"
        f" condition {rule} (a, b >= 0)"
    )


def neighbor(code: AdditiveCode, v: MixedVector, *, max_n: int = DEFAULT_AMBIENT_GUARD) -> AdditiveCode:
    """Neighbor through a self-orthogonal vector outside the code.

    Keeps the words pairing to zero with v and adjoins v itself; the
    result is self-dual of the same length, and Type 0 whenever v has
    odd weight.
    """
    if not is_self_dual(code):
        raise PreconditionError("neighbor construction needs a self-dual code")
    if (v.alpha, v.beta) != (code.ambient.alpha, code.ambient.beta):
        raise PreconditionError("vector shape does not match the code")
    if v in code.codewords:
        raise PreconditionError(f"vector {v} is already a codeword")
    if inner_product(v, v) != 0:
        raise PreconditionError(f"vector {v} is not self-orthogonal")
    kept = [w for w in code.codewords if inner_product(w, v) == 0]
    words = set()
    for j in range(v.order()):
        jv = v.scale(j)
        words.update(w + jv for w in kept)
    out = AdditiveCode.from_codewords(code.ambient, words, max_n=max_n, check=False)
    if len(out) != len(code):
        raise AssertionError("neighbor size mismatch")  # pragma: no cover
    return out


def find_neighbor_vector(
    code: AdditiveCode, *, odd_weight: bool | None = None
) -> MixedVector | None:
    """First self-orthogonal non-codeword in lexicographic order."""
    for v in ambient_vectors(code.ambient):
        if v in code.codewords or inner_product(v, v) != 0:
            continue
        if odd_weight is not None and (weight(v) % 2 == 1) != odd_weight:
            continue
        return v
    return None
