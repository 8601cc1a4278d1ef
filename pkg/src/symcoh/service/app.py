"""FastAPI application exposing the workbench over HTTP.

Built algebras, oracles and comparison data are cached in-process, so a
long-running service amortizes the exact computations across requests.  The
CLI talks to these endpoints through an in-process transport by default and
to a remote instance when one is configured.

Input problems that a client should repair (bad expressions, out-of-range
generator indices) come back as HTTP 400 with a structured detail; oracle
budget exhaustion is not an error but a flagged partial result, mirroring
the exit-code contract of the CLI.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from .. import expressions
from ..oracle import BudgetExceededError, invariant_betti, macdonald_poincare
from ..sympow import build
from ..verifier import SUITES, run_suites
from . import schemas

app = FastAPI(
    title="symcoh workbench",
    description="Exact presentations of the cohomology of symmetric powers of curves",
    version="0.1.0",
)


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/betti", response_model=schemas.BettiResponse)
def betti(request: schemas.BettiRequest) -> schemas.BettiResponse:
    algebra = build(request.genus, request.power)
    dims = algebra.betti()
    oracle_rows = None
    if request.oracle:
        series = macdonald_poincare(request.genus, request.power)
        try:
            counted = invariant_betti(request.genus, request.power)
            oracle_rows = schemas.OracleRows(
                invariant=counted,
                macdonald=series,
                match=dims == counted == series,
            )
        except BudgetExceededError as exc:
            oracle_rows = schemas.OracleRows(
                invariant=None,
                macdonald=series,
                match=None,
                status="budget_exceeded",
                message=str(exc),
            )
    return schemas.BettiResponse(
        genus=request.genus, power=request.power, dims=dims, oracle=oracle_rows
    )


@app.post("/presentation", response_model=schemas.PresentationResponse)
def presentation(request: schemas.PresentationRequest) -> schemas.PresentationResponse:
    algebra = build(request.genus, request.power)
    pres = algebra.presentation
    rows = []
    for d in range(algebra.top_degree + 1):
        ambient, ideal_dim, quotient = pres.dims(d)
        rows.append(
            schemas.DegreeRow(
                degree=d,
                dim_ambient=ambient,
                dim_ideal=ideal_dim,
                dim_quotient=quotient,
                normal_form_monomials=[
                    expressions.render_monomial(m)
                    for m in pres.normalform_monomials(d)
                ],
            )
        )
    return schemas.PresentationResponse(
        genus=request.genus,
        power=request.power,
        ideal_kind=algebra.spec.kind,
        shift_or_exponent=algebra.spec.parameter,
        beta=expressions.render_beta(request.genus),
        degreewise=rows,
    )


@app.post("/eval", response_model=schemas.EvalResponse)
def evaluate(request: schemas.EvalRequest) -> schemas.EvalResponse:
    try:
        value = expressions.parse(request.expression, request.genus)
    except expressions.ExpressionError as exc:
        raise HTTPException(
            status_code=400,
            detail=schemas.ErrorDetail(
                kind="parse", message=exc.message, caret=exc.caret_message()
            ).model_dump(),
        )
    algebra = build(request.genus, request.power)
    reduced = algebra.psi(value)
    if request.integrate:
        integral = algebra.integrate(reduced)
        return schemas.EvalResponse(
            genus=request.genus,
            power=request.power,
            integral=expressions.render_rational(integral),
        )
    return schemas.EvalResponse(
        genus=request.genus,
        power=request.power,
        normal_form=expressions.render(reduced.value),
    )


@app.post("/verify", response_model=schemas.VerifyResponse)
def verify(request: schemas.VerifyRequest) -> schemas.VerifyResponse:
    names = request.suites
    if "all" in names:
        names = sorted(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise HTTPException(
            status_code=400,
            detail=schemas.ErrorDetail(
                kind="usage", message=f"unknown suites: {', '.join(unknown)}"
            ).model_dump(),
        )
    report = run_suites(names, request.genus, request.max_power)
    return schemas.VerifyResponse(report=report)
