"""Pydantic request/response models for the HTTP service.

Mirrors the CLI conventions: exponents and orders are plain even
q-exponents, big integers as decimal strings.
"""

from __future__ import annotations

from pydantic import BaseModel, Field, field_validator

DecimalStr = str


class PolyPayload(BaseModel):
    poly: list[DecimalStr]


class SeriesPayload(BaseModel):
    variable: str = "q"
    unit: int = 2
    terms: list[tuple[int, DecimalStr | PolyPayload]]
    order: int


class ExpandRequest(BaseModel):
    form: str = Field(description="delta, e4, j, J or niemeier:<name>")
    order: int = Field(default=20, ge=2)


class ExtremalRequest(BaseModel):
    k: int = Field(ge=1, le=6)
    order: int = Field(default=20, ge=2)
    x: DecimalStr | None = None
    solve_g0: DecimalStr | None = None

    @field_validator("x", "solve_g0", mode="before")
    @classmethod
    def _intlike_to_str(cls, v):
        return str(v) if isinstance(v, int) else v


class FamilyPayload(BaseModel):
    k: int
    order: int
    g0_poly: PolyPayload
    symfuncs: list[PolyPayload]
    series: SeriesPayload


class RootsPayload(BaseModel):
    k: int
    target: DecimalStr
    roots: list[DecimalStr]


class DecomposeRequest(BaseModel):
    value: DecimalStr | None = None
    form: str | None = None
    exp_from: int = Field(default=2, alias="from")
    exp_to: int = Field(default=20, alias="to")

    model_config = {"populate_by_name": True}

    @field_validator("value", mode="before")
    @classmethod
    def _intlike_to_str(cls, v):
        return str(v) if isinstance(v, int) else v


class DecompositionPayload(BaseModel):
    coefficient: DecimalStr
    terms: list[tuple[DecimalStr, DecimalStr]]


class SeriesDecompositionPayload(DecompositionPayload):
    exponent: int


class VerifyRequest(BaseModel):
    identities: list[str] | None = Field(
        default=None, description="Identity lines; defaults to the built-in table."
    )
    i_max: int = Field(default=5, ge=0)


class IdentityRowPayload(BaseModel):
    i: int
    subscript: int
    lhs: DecimalStr
    rhs: DecimalStr
    passed: bool = Field(alias="pass")

    model_config = {"populate_by_name": True}


class IdentityReportPayload(BaseModel):
    k: int
    identity: str
    all_pass: bool
    rows: list[IdentityRowPayload]


class VerifyResponse(BaseModel):
    all_pass: bool
    reports: list[IdentityReportPayload]


class NiemeierRecordPayload(BaseModel):
    name: str
    coxeter_h: int
    massless: int


class HealthPayload(BaseModel):
    status: str = "ok"
