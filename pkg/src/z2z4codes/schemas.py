"""Pydantic request/response models for the analysis service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field


class CodeRequest(BaseModel):
    text: str = Field(description="Code file: 'alpha beta' header plus generator rows")
    guard: int | None = Field(default=None, description="Override the ambient guard")


class DualRequest(CodeRequest):
    oracle: bool = False


class EnumeratorRequest(CodeRequest):
    variant: Literal["plain", "even", "shadow"] = "plain"
    format: Literal["text", "coeffs"] = "text"


class NeighborRequest(CodeRequest):
    vector: str


class GlueRequest(BaseModel):
    text_c: str
    text_d: str
    guard: int | None = None


class ConstructRequest(BaseModel):
    name: str | None = None
    alpha: int | None = None
    beta: int | None = None
    cls: str | None = None
    separable: bool | None = None
    guard: int | None = None


class SearchRequest(BaseModel):
    alpha: int
    beta: int
    cls: str | None = None
    guard: int | None = None
    dedup_equivalence: bool = False


class TypeParamsModel(BaseModel):
    alpha: int
    beta: int
    gamma: int
    delta: int
    kappa: int


class GleasonTerm(BaseModel):
    g1_power: int
    g2_power: int
    numerator: int
    denominator: int


class ReportResponse(BaseModel):
    params: TypeParamsModel
    size: int
    self_dual: bool
    cls: str
    separable: bool
    antipodal: bool
    enumerator: str
    gleason: list[GleasonTerm] | None
    shadow_size: int | None
    text: str


class ClassifyResponse(BaseModel):
    self_dual: bool
    cls: str
    separable: bool
    antipodal: bool
    text: str


class CodeResponse(BaseModel):
    code: str
    params: TypeParamsModel
    text: str


class DualResponse(CodeResponse):
    oracle_used: bool


class EnumeratorResponse(BaseModel):
    degree: int
    coefficients: list[str]
    text: str


class GleasonResponse(BaseModel):
    cls: str
    terms: list[GleasonTerm]
    text: str


class ShadowResponse(BaseModel):
    size: int
    vectors: list[str]
    enumerator: str
    text: str


class GlueResponse(CodeResponse):
    variant: str


class SearchMatch(BaseModel):
    cls: str
    size: int
    generators: list[str]
    enumerator: str


class SearchResponse(BaseModel):
    alpha: int
    beta: int
    count: int
    candidates_checked: int
    matches: list[SearchMatch]
    text: str


class CheckModel(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    checks: list[CheckModel]
    passed: int
    failed: int
    text: str


class ErrorDetail(BaseModel):
    type: Literal["parse", "precondition", "guard", "internal"]
    message: str
