"""Request and response models for the workbench service."""

from __future__ import annotations

from pydantic import BaseModel, Field

SCHEMA_VERSION = 1

MAX_GENUS = 6
MAX_POWER = 16


class BettiRequest(BaseModel):
    genus: int = Field(ge=0, le=MAX_GENUS)
    power: int = Field(ge=0, le=MAX_POWER)
    oracle: bool = False


class OracleRows(BaseModel):
    invariant: list[int] | None = None
    macdonald: list[int]
    match: bool | None = None
    status: str = "ok"
    message: str | None = None


class BettiResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    genus: int
    power: int
    dims: list[int]
    oracle: OracleRows | None = None


class PresentationRequest(BaseModel):
    genus: int = Field(ge=0, le=MAX_GENUS)
    power: int = Field(ge=0, le=MAX_POWER)


class DegreeRow(BaseModel):
    degree: int
    dim_ambient: int
    dim_ideal: int
    dim_quotient: int
    normal_form_monomials: list[str]


class PresentationResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    genus: int
    power: int
    ideal_kind: str
    shift_or_exponent: int
    beta: str
    degreewise: list[DegreeRow]


class EvalRequest(BaseModel):
    genus: int = Field(ge=0, le=MAX_GENUS)
    power: int = Field(ge=0, le=MAX_POWER)
    expression: str
    integrate: bool = False


class EvalResponse(BaseModel):
    schema_version: int = SCHEMA_VERSION
    genus: int
    power: int
    normal_form: str | None = None
    integral: str | None = None


class VerifyRequest(BaseModel):
    suites: list[str]
    genus: int = Field(ge=0, le=MAX_GENUS)
    max_power: int = Field(ge=0, le=MAX_POWER)


class VerifyResponse(BaseModel):
    report: dict


class ErrorDetail(BaseModel):
    kind: str  # "usage" | "parse"
    message: str
    caret: str | None = None
