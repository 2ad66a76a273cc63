"""Analysis report assembly shared by the service and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classify import SelfDualClass, classify
from .codes import (
    AdditiveCode,
    TypeParams,
    is_antipodal,
    is_separable,
    type_params,
)
from .duality import is_self_dual
from .enumerators import (
    GleasonDecomposition,
    format_enumerator,
    format_gleason,
    gleason_decompose,
    weight_enumerator,
)
from .shadow import decompose


@dataclass(frozen=True)
class AnalysisReport:
    params: TypeParams
    size: int
    self_dual: bool
    cls: SelfDualClass
    separable: bool
    antipodal: bool
    enumerator_text: str
    gleason: GleasonDecomposition | None
    shadow_size: int | None

    def classification_text(self) -> str:
        sep = "separable" if self.separable else "non-separable"
        anti = "antipodal" if self.antipodal else "non-antipodal"
        return f"{self.cls.value}, {sep}, {anti}"

    def lines(self) -> list[str]:
        p = self.params
        out = [
            f"ambient: alpha={p.alpha} beta={p.beta} n={p.alpha + 2 * p.beta}",
            f"type: {p}",
            f"codewords: {self.size}",
            f"self-dual: {'yes' if self.self_dual else 'no'}",
            f"classification: {self.classification_text()}",
            f"weight enumerator: {self.enumerator_text}",
        ]
        if self.gleason is not None:
            out.append(f"invariant ring [{self.cls.value}]: {format_gleason(self.gleason)}")
        if self.shadow_size is not None:
            out.append(f"shadow: {self.shadow_size} vectors")
        return out


def build_report(code: AdditiveCode) -> AnalysisReport:
    params = type_params(code)
    self_dual = is_self_dual(code)
    cls = classify(code)
    w = weight_enumerator(code)
    gleason = None
    if cls is not SelfDualClass.NOT_SELF_DUAL:
        gleason = gleason_decompose(w, cls)
    shadow_size = None
    if cls is SelfDualClass.TYPE_0:
        # coset construction; avoids the exponential dual enumeration
        shadow_size = len(decompose(code).shadow_set)
    return AnalysisReport(
        params=params,
        size=len(code.codewords),
        self_dual=self_dual,
        cls=cls,
        separable=is_separable(code),
        antipodal=is_antipodal(code),
        enumerator_text=format_enumerator(w),
        gleason=gleason,
        shadow_size=shadow_size,
    )


def gleason_coefficient_list(d: GleasonDecomposition) -> list[dict]:
    """JSON-friendly listing of the ring coordinates."""
    out = []
    for (a, b), c in d.coefficients:
        value = c if isinstance(c, Fraction) else Fraction(c)
        out.append(
            {
                "g1_power": a,
                "g2_power": b,
                "numerator": value.numerator,
                "denominator": value.denominator,
            }
        )
    return out
