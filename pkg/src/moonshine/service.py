"""HTTP service exposing the package over JSON.

A thin FastAPI layer over the same functions the CLI calls; useful when
many clients want expansions without installing the package, and to
amortize the series caches across requests. Run with::

    uvicorn moonshine.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import extremal, forms, identities, monster, serialize
from .errors import MoonshineError, UnknownForm, exit_code
from .schemas import (
    DecomposeRequest,
    DecompositionPayload,
    ExpandRequest,
    ExtremalRequest,
    FamilyPayload,
    HealthPayload,
    NiemeierRecordPayload,
    RootsPayload,
    SeriesDecompositionPayload,
    SeriesPayload,
    VerifyRequest,
    VerifyResponse,
)

app = FastAPI(
    title="moonshine",
    description="Exact q-series arithmetic: modular forms, extremal "
    "partition-function families, coefficient identities and Monster "
    "decompositions.",
)


@app.exception_handler(MoonshineError)
async def _moonshine_error(request: Request, exc: MoonshineError) -> JSONResponse:
    status = 404 if isinstance(exc, UnknownForm) else 400
    return JSONResponse(
        status_code=status,
        content={"error": type(exc).__name__, "detail": str(exc), "code": exit_code(exc)},
    )


@app.get("/health", response_model=HealthPayload)
async def health() -> HealthPayload:
    return HealthPayload()


@app.post("/expand", response_model=SeriesPayload)
async def expand(req: ExpandRequest) -> dict:
    series = forms.by_name(req.form, req.order // 2)
    return serialize.series_payload(series)


@app.post("/extremal", response_model=FamilyPayload | RootsPayload | SeriesPayload)
async def extremal_endpoint(req: ExtremalRequest) -> dict:
    fam = extremal.build_family(req.k, max(req.order // 2, 1))
    if req.solve_g0 is not None:
        target = int(req.solve_g0)
        return serialize.roots_payload(fam, target, extremal.solve_g0(fam, target))
    if req.x is not None:
        return serialize.series_payload(extremal.specialize(fam, int(req.x)))
    return serialize.family_payload(fam)


@app.post(
    "/decompose",
    response_model=DecompositionPayload | list[SeriesDecompositionPayload],
)
async def decompose(req: DecomposeRequest) -> dict | list:
    if (req.value is None) == (req.form is None):
        return JSONResponse(
            status_code=422,
            content={"error": "BadRequest", "detail": "exactly one of value or form"},
        )
    if req.value is not None:
        return serialize.decomposition_payload(monster.greedy_decompose(int(req.value)))
    lo = max((req.exp_from + 1) // 2, 0)
    hi = req.exp_to // 2
    series = forms.by_name(req.form, hi)
    return serialize.decompositions_payload(monster.decompose_series(series, lo, hi))


@app.post("/verify", response_model=VerifyResponse)
async def verify(req: VerifyRequest) -> dict:
    if req.identities is None:
        asts = identities.builtin_table1()
    else:
        asts = [identities.parse(line) for line in req.identities]
    reports = identities.run_suite(req.i_max, asts)
    return serialize.reports_payload(reports)


@app.get("/niemeier", response_model=list[NiemeierRecordPayload])
async def niemeier() -> list[dict]:
    return serialize.catalog_payload(forms.catalog())
