"""Self-dual class (Type 0 / I / II), admissible shapes and structure checks."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .codes import AdditiveCode, type_params
from .duality import is_self_dual
from .errors import PreconditionError
from .vectors import (
    MixedVector,
    binary_inner,
    gray_packed,
    quaternary_inner,
    weight,
)


class SelfDualClass(Enum):
    NOT_SELF_DUAL = "not self-dual"
    TYPE_0 = "Type 0"
    TYPE_I = "Type I"
    TYPE_II = "Type II"

    @classmethod
    def parse(cls, label: str) -> "SelfDualClass":
        table = {
            "0": cls.TYPE_0,
            "type0": cls.TYPE_0,
            "i": cls.TYPE_I,
            "1": cls.TYPE_I,
            "typei": cls.TYPE_I,
            "type1": cls.TYPE_I,
            "ii": cls.TYPE_II,
            "2": cls.TYPE_II,
            "typeii": cls.TYPE_II,
            "type2": cls.TYPE_II,
        }
        key = label.strip().lower().replace(" ", "").replace("-", "")
        if key not in table:
            raise PreconditionError(f"unknown class {label!r}; use Type0, TypeI or TypeII")
        return table[key]


def classify(code: AdditiveCode) -> SelfDualClass:
    """Weight-residue class of a self-dual code."""
    if not is_self_dual(code):
        return SelfDualClass.NOT_SELF_DUAL
    weights = [weight(w) for w in code.codewords]
    if any(w % 2 for w in weights):
        return SelfDualClass.TYPE_0
    if all(w % 4 == 0 for w in weights):
        return SelfDualClass.TYPE_II
    return SelfDualClass.TYPE_I


@dataclass(frozen=True)
class AdmissibilityQuery:
    alpha: int
    beta: int
    cls: SelfDualClass
    separable: bool | None = None

    def __post_init__(self) -> None:
        if self.alpha == 0 and self.beta == 0:
            raise PreconditionError("alpha and beta must not both be zero")
        if self.cls is SelfDualClass.TYPE_0 and self.separable is True:
            raise PreconditionError("Type 0 codes are never separable")


def _table_admissible(alpha: int, beta: int, cls: SelfDualClass, separable: bool) -> bool:
    if cls is SelfDualClass.TYPE_0:
        return not separable and alpha >= 2 and alpha % 2 == 0 and beta >= 2
    if cls is SelfDualClass.TYPE_I:
        if separable:
            return alpha >= 2 and alpha % 2 == 0 and beta >= 1
        return alpha >= 4 and alpha % 2 == 0 and beta >= 4
    if cls is SelfDualClass.TYPE_II:
        return alpha >= 8 and alpha % 8 == 0 and beta >= 4 and beta % 4 == 0
    raise PreconditionError("admissibility is defined for Type 0/I/II only")


def admissible(q: AdmissibilityQuery) -> bool:
    """Whether a self-dual code of this class exists for the shape (alpha, beta).

    The constructive ladder covers alpha, beta > 0; for a pure binary or
    pure quaternary shape only the parity and length-residue constraints
    are applied (alpha even, and n divisible by 8 for Type II).
    """
    if q.cls is SelfDualClass.NOT_SELF_DUAL:
        raise PreconditionError("admissibility is defined for Type 0/I/II only")
    if q.alpha == 0 or q.beta == 0:
        if q.alpha % 2:
            return False
        if q.cls is SelfDualClass.TYPE_II:
            return (q.alpha + 2 * q.beta) % 8 == 0
        return True
    if q.separable is None:
        variants = [False] if q.cls is SelfDualClass.TYPE_0 else [True, False]
        return any(_table_admissible(q.alpha, q.beta, q.cls, s) for s in variants)
    return _table_admissible(q.alpha, q.beta, q.cls, q.separable)


def gray_image_linear(code: AdditiveCode) -> bool:
    """Whether the Gray image set is closed under componentwise XOR."""
    image = {gray_packed(w) for w in code.codewords}
    return all(u ^ v in image for u in image for v in image)


def find_pairing_witness(code: AdditiveCode) -> tuple[MixedVector, MixedVector] | None:
    """A codeword pair with binary pairing 1 and quaternary pairing 2.

    Every non-separable self-dual code contains one; scanning is in
    lexicographic order, so the result is deterministic.
    """
    words = code.sorted_codewords
    for u in words:
        for v in words:
            if binary_inner(u, v) == 1 and quaternary_inner(u, v) == 2:
                return (u, v)
    return None


@dataclass(frozen=True)
class StructureReport:
    """Evaluated structure relations of a self-dual code."""

    cls: SelfDualClass
    separable: bool
    antipodal: bool
    delta: int
    antipodal_iff_even: bool
    separable_implies_antipodal: bool
    nonseparable_implies_delta: bool
    witness: tuple[MixedVector, MixedVector] | None

    @property
    def consistent(self) -> bool:
        return (
            self.antipodal_iff_even
            and self.separable_implies_antipodal
            and self.nonseparable_implies_delta
        )


def check_structure_relations(code: AdditiveCode) -> StructureReport:
    """Evaluate the antipodality/separability/delta relations on a self-dual code."""
    from .codes import is_antipodal, is_separable

    cls = classify(code)
    if cls is SelfDualClass.NOT_SELF_DUAL:
        raise PreconditionError("structure relations apply to self-dual codes only")
    separable = is_separable(code)
    antipodal = is_antipodal(code)
    delta = type_params(code).delta
    witness = None if separable else find_pairing_witness(code)
    return StructureReport(
        cls=cls,
        separable=separable,
        antipodal=antipodal,
        delta=delta,
        antipodal_iff_even=antipodal == (cls in (SelfDualClass.TYPE_I, SelfDualClass.TYPE_II)),
        separable_implies_antipodal=(not separable) or antipodal,
        nonseparable_implies_delta=separable or delta >= 1,
        witness=witness,
    )
