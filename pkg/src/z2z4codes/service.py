"""FastAPI service exposing the code-analysis operations."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import schemas
from .classify import SelfDualClass, classify
from .codes import (
    DEFAULT_AMBIENT_GUARD,
    AdditiveCode,
    TypeParams,
    is_antipodal,
    is_separable,
    type_params,
)
from .construct import catalog, ladder_build, neighbor
from .duality import brute_force_dual, dual
from .enumerators import (
    even_subcode_we,
    format_coefficients,
    format_enumerator,
    format_gleason,
    gleason_decompose,
    shadow_we,
    weight_enumerator,
)
from .errors import GuardExceeded, ParseError, PreconditionError
from .fileio import format_generator_matrix, parse_generator_matrix
from .reports import build_report, gleason_coefficient_list
from .search import DEFAULT_SEARCH_GUARD, search_self_dual
from .shadow import glue, shadow
from .vectors import MixedVector
from .verify import run_verification

app = FastAPI(
    title="z2z4codes",
    version="1.0.0",
    description="Exact analysis of self-dual additive codes over Z2 x Z4",
)


@app.exception_handler(ParseError)
async def _parse_error(_: Request, exc: ParseError) -> JSONResponse:
    return JSONResponse(status_code=400, content={"detail": {"type": "parse", "message": str(exc)}})


@app.exception_handler(PreconditionError)
async def _precondition_error(_: Request, exc: PreconditionError) -> JSONResponse:
    return JSONResponse(
        status_code=422, content={"detail": {"type": "precondition", "message": str(exc)}}
    )


@app.exception_handler(GuardExceeded)
async def _guard_error(_: Request, exc: GuardExceeded) -> JSONResponse:
    return JSONResponse(status_code=413, content={"detail": {"type": "guard", "message": str(exc)}})


def _load(text: str, guard: int | None) -> AdditiveCode:
    gen = parse_generator_matrix(text)
    return AdditiveCode.span(gen, max_n=guard if guard is not None else DEFAULT_AMBIENT_GUARD)


def _params_model(p: TypeParams) -> schemas.TypeParamsModel:
    return schemas.TypeParamsModel(
        alpha=p.alpha, beta=p.beta, gamma=p.gamma, delta=p.delta, kappa=p.kappa
    )


def _code_text(code: AdditiveCode) -> str:
    return format_generator_matrix(code.generators)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/info", response_model=schemas.ReportResponse)
def info(req: schemas.CodeRequest) -> schemas.ReportResponse:
    code = _load(req.text, req.guard)
    report = build_report(code)
    return schemas.ReportResponse(
        params=_params_model(report.params),
        size=report.size,
        self_dual=report.self_dual,
        cls=report.cls.value,
        separable=report.separable,
        antipodal=report.antipodal,
        enumerator=report.enumerator_text,
        gleason=(
            None
            if report.gleason is None
            else [schemas.GleasonTerm(**t) for t in gleason_coefficient_list(report.gleason)]
        ),
        shadow_size=report.shadow_size,
        text="\n".join(report.lines()),
    )


@app.post("/classify", response_model=schemas.ClassifyResponse)
def classify_endpoint(req: schemas.CodeRequest) -> schemas.ClassifyResponse:
    code = _load(req.text, req.guard)
    cls = classify(code)
    sep = is_separable(code)
    anti = is_antipodal(code)
    sep_text = "separable" if sep else "non-separable"
    anti_text = "antipodal" if anti else "non-antipodal"
    return schemas.ClassifyResponse(
        self_dual=cls is not SelfDualClass.NOT_SELF_DUAL,
        cls=cls.value,
        separable=sep,
        antipodal=anti,
        text=f"{cls.value}, {sep_text}, {anti_text}",
    )


@app.post("/dual", response_model=schemas.DualResponse)
def dual_endpoint(req: schemas.DualRequest) -> schemas.DualResponse:
    code = _load(req.text, req.guard)
    guard = req.guard if req.guard is not None else DEFAULT_AMBIENT_GUARD
    d = brute_force_dual(code, max_n=guard) if req.oracle else dual(code, max_n=guard)
    # re-derive generators from the sorted codewords so that both dual
    # paths print the identical matrix
    d = AdditiveCode.from_codewords(d.ambient, d.codewords, max_n=guard, check=False)
    text = _code_text(d)
    return schemas.DualResponse(
        code=text,
        params=_params_model(type_params(d)),
        oracle_used=req.oracle,
        text=text.rstrip("\n"),
    )


@app.post("/weight-enumerator", response_model=schemas.EnumeratorResponse)
def weight_enumerator_endpoint(req: schemas.EnumeratorRequest) -> schemas.EnumeratorResponse:
    code = _load(req.text, req.guard)
    w = weight_enumerator(code)
    if req.variant == "even":
        w = even_subcode_we(w)
    elif req.variant == "shadow":
        if classify(code) is not SelfDualClass.TYPE_0:
            raise PreconditionError("shadow enumerator needs a Type 0 code")
        w = shadow_we(w)
    rendered = format_coefficients(w) if req.format == "coeffs" else format_enumerator(w)
    return schemas.EnumeratorResponse(
        degree=w.degree,
        coefficients=[str(c) for c in w.coefficients],
        text=rendered,
    )


@app.post("/gleason", response_model=schemas.GleasonResponse)
def gleason_endpoint(req: schemas.CodeRequest) -> schemas.GleasonResponse:
    code = _load(req.text, req.guard)
    cls = classify(code)
    if cls is SelfDualClass.NOT_SELF_DUAL:
        raise PreconditionError("ring decomposition needs a self-dual code")
    decomposition = gleason_decompose(weight_enumerator(code), cls)
    return schemas.GleasonResponse(
        cls=cls.value,
        terms=[schemas.GleasonTerm(**t) for t in gleason_coefficient_list(decomposition)],
        text=f"{cls.value}: {format_gleason(decomposition)}",
    )


@app.post("/shadow", response_model=schemas.ShadowResponse)
def shadow_endpoint(req: schemas.CodeRequest) -> schemas.ShadowResponse:
    code = _load(req.text, req.guard)
    guard = req.guard if req.guard is not None else DEFAULT_AMBIENT_GUARD
    vectors = sorted(shadow(code, max_n=guard), key=MixedVector.sort_key)
    w = shadow_we(weight_enumerator(code)) if vectors else None
    enum_text = format_enumerator(w) if w is not None else "0"
    lines = [v.literal() for v in vectors]
    text = "\n".join([f"shadow size: {len(vectors)}", f"enumerator: {enum_text}"] + lines)
    return schemas.ShadowResponse(
        size=len(vectors),
        vectors=lines,
        enumerator=enum_text,
        text=text,
    )


@app.post("/neighbor", response_model=schemas.CodeResponse)
def neighbor_endpoint(req: schemas.NeighborRequest) -> schemas.CodeResponse:
    code = _load(req.text, req.guard)
    v = MixedVector.parse(req.vector)
    out = neighbor(code, v)
    text = _code_text(out)
    return schemas.CodeResponse(
        code=text, params=_params_model(type_params(out)), text=text.rstrip("\n")
    )


@app.post("/glue", response_model=schemas.GlueResponse)
def glue_endpoint(req: schemas.GlueRequest) -> schemas.GlueResponse:
    guard = req.guard if req.guard is not None else DEFAULT_AMBIENT_GUARD
    c = _load(req.text_c, req.guard)
    d = _load(req.text_d, req.guard)
    result = glue(c, d, max_n=guard)
    text = _code_text(result.code)
    return schemas.GlueResponse(
        code=text,
        params=_params_model(type_params(result.code)),
        variant=result.variant,
        text=f"# variant: {result.variant}\n{text.rstrip(chr(10))}",
    )


@app.post("/construct", response_model=schemas.CodeResponse)
def construct_endpoint(req: schemas.ConstructRequest) -> schemas.CodeResponse:
    guard = req.guard if req.guard is not None else DEFAULT_AMBIENT_GUARD
    if req.name is not None:
        code = catalog(req.name).code
    else:
        if req.alpha is None or req.beta is None or req.cls is None:
            raise PreconditionError("construct needs either a catalog name or alpha/beta/class")
        code = ladder_build(
            req.alpha, req.beta, SelfDualClass.parse(req.cls), req.separable, max_n=guard
        )
    text = _code_text(code)
    return schemas.CodeResponse(
        code=text, params=_params_model(type_params(code)), text=text.rstrip("\n")
    )


@app.post("/search", response_model=schemas.SearchResponse)
def search_endpoint(req: schemas.SearchRequest) -> schemas.SearchResponse:
    guard = req.guard if req.guard is not None else DEFAULT_SEARCH_GUARD
    cls = SelfDualClass.parse(req.cls) if req.cls is not None else None
    result = search_self_dual(
        req.alpha, req.beta, cls, max_n=guard, dedup_equivalence=req.dedup_equivalence
    )
    matches = []
    lines = [f"{len(result.entries)} self-dual codes at alpha={req.alpha} beta={req.beta}"]
    for entry in result.entries:
        gens = [row.literal() for row in entry.generators.rows]
        matches.append(
            schemas.SearchMatch(
                cls=entry.cls.value,
                size=len(entry.code),
                generators=gens,
                enumerator=format_enumerator(weight_enumerator(entry.code)),
            )
        )
        lines.append(f"[{entry.cls.value}] " + "  ".join(gens))
    return schemas.SearchResponse(
        alpha=req.alpha,
        beta=req.beta,
        count=len(result.entries),
        candidates_checked=result.candidates_checked,
        matches=matches,
        text="\n".join(lines),
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify_endpoint() -> schemas.VerifyResponse:
    result = run_verification()
    return schemas.VerifyResponse(
        checks=[
            schemas.CheckModel(name=c.name, passed=c.passed, detail=c.detail)
            for c in result.checks
        ],
        passed=result.passed,
        failed=result.failed,
        text="\n".join(result.lines()),
    )
