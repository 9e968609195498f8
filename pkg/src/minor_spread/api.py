"""HTTP service wrapping the calculator.

Stateless endpoints over the pure core: every response is derived from the
request alone, so the service can run with any number of workers.  Domain
errors surface as a stable error document ``{"error": {"code", "message"}}``.
"""

from __future__ import annotations

import time

from fastapi import FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from . import __version__
from .errors import MinorSpreadError, SelfCheckFailed, SizeBoundExceeded
from .invariants import InvariantReport, full_report
from .lattices import build_d1, build_d2, build_theta, theta_join_irreducibles
from .posets import Poset
from .reference import REFERENCE_SPEC, reference_report
from .schemas import (
    ComputeReport,
    ComputeRequest,
    ExampleReport,
    ExampleRowBlock,
    HasseReport,
    HasseRequest,
    OracleBlock,
    SizesBlock,
    SpecDocument,
    SweepReport,
    SweepRequest,
    VerifyReport,
    VerifyRequest,
)
from .verification import run_sweep, verify_spec

TOOL_NAME = "minor-spread"

app = FastAPI(title=TOOL_NAME, version=__version__)


@app.exception_handler(MinorSpreadError)
async def _domain_error(request, exc: MinorSpreadError):
    status = 500 if isinstance(exc, SelfCheckFailed) else 422
    return JSONResponse(
        status_code=status,
        content={"error": {"code": exc.code, "message": str(exc)}},
    )


@app.exception_handler(RequestValidationError)
async def _schema_error(request, exc: RequestValidationError):
    problems = "; ".join(
        ".".join(str(part) for part in err["loc"]) + ": " + err["msg"]
        for err in exc.errors()
    )
    return JSONResponse(
        status_code=422,
        content={"error": {"code": "invalid_spec", "message": problems}},
    )


@app.get("/")
def root() -> dict:
    return {"tool": TOOL_NAME, "version": __version__}


def _compute_report(doc: SpecDocument, with_oracle: bool, timing_ms=None) -> ComputeReport:
    report: InvariantReport = full_report(doc.to_problem_spec(), with_oracle=with_oracle)
    return _render_report(doc, report, timing_ms)


def _render_report(doc: SpecDocument, report: InvariantReport, timing_ms=None) -> ComputeReport:
    oracle = None
    if report.analytic_spread_oracle is not None:
        oracle = OracleBlock(
            analytic_spread=report.analytic_spread_oracle,
            reduction_number=report.reduction_number_oracle,
            rank_theta=report.rank_theta_oracle,
            rank_p=report.rank_p_oracle,
            spread_agrees=report.spread_agrees,
            reduction_agrees=report.reduction_agrees,
        )
    return ComputeReport(
        tool=TOOL_NAME,
        version=__version__,
        spec=doc,
        k=report.k,
        analytic_spread=report.analytic_spread,
        reduction_number=report.reduction_number,
        rank_theta=report.rank_theta,
        rank_p=report.rank_p,
        row_l_indices=list(report.row_l_indices),
        column_l_indices=list(report.column_l_indices),
        sizes=SizesBlock(
            d1=report.d1_size,
            d2=report.d2_size,
            theta=report.theta_size,
            p1=report.p1_size,
            p2=report.p2_size,
        ),
        oracle=oracle,
        timing_ms=timing_ms,
    )


@app.post("/compute", response_model=ComputeReport, response_model_exclude_none=True)
def compute(request: ComputeRequest) -> ComputeReport:
    started = time.perf_counter()
    report = _compute_report(request.spec, request.with_oracle)
    if request.timing:
        report.timing_ms = round((time.perf_counter() - started) * 1000, 3)
    return report


@app.get("/example", response_model=ExampleReport, response_model_exclude_none=True)
def example(timing: bool = Query(default=False)) -> ExampleReport:
    started = time.perf_counter()
    row_block, report = reference_report()
    doc = SpecDocument.from_problem_spec(REFERENCE_SPEC)
    out = ExampleReport(
        tool=TOOL_NAME,
        version=__version__,
        spec=doc,
        k=REFERENCE_SPEC.k,
        row=ExampleRowBlock(**row_block),
        report=_render_report(doc, report),
        self_check_passed=True,
    )
    if timing:
        out.timing_ms = round((time.perf_counter() - started) * 1000, 3)
    return out


def _select_poset(request: HasseRequest) -> Poset:
    spec = request.spec.to_problem_spec()
    which = request.which
    if which == "d1":
        return build_d1(spec)
    if which == "d2":
        return build_d2(spec)
    if which == "p1":
        return build_d1(spec).join_irreducibles()
    if which == "p2":
        return build_d2(spec).join_irreducibles()
    if which == "p":
        return theta_join_irreducibles(spec)
    return build_theta(spec)


@app.post("/hasse", response_model=HasseReport)
def hasse(request: HasseRequest) -> HasseReport:
    poset = _select_poset(request)
    if len(poset) > request.max_nodes:
        raise SizeBoundExceeded(
            f"{request.which} has {len(poset)} nodes, above the rendering cap "
            f"{request.max_nodes}"
        )
    return HasseReport(
        tool=TOOL_NAME,
        version=__version__,
        which=request.which,
        node_count=len(poset),
        sink_count=len(poset.minimal_elements()),
        dot=poset.to_dot(name=request.which),
    )


@app.post("/verify", response_model=VerifyReport, response_model_exclude_none=True)
def verify(request: VerifyRequest) -> VerifyReport:
    started = time.perf_counter()
    results = verify_spec(
        request.spec.to_problem_spec(), d_max=request.d_max, corrupt=request.mutate
    )
    report = VerifyReport(
        tool=TOOL_NAME,
        version=__version__,
        spec=request.spec,
        d_max=request.d_max,
        passed=all(r.passed for r in results),
        checks=[
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ],
    )
    if request.timing:
        report.timing_ms = round((time.perf_counter() - started) * 1000, 3)
    return report


@app.post("/sweep", response_model=SweepReport, response_model_exclude_none=True)
def sweep(request: SweepRequest) -> SweepReport:
    started = time.perf_counter()
    summary = run_sweep(request.max_m, request.max_n, jobs=request.jobs)
    report = SweepReport(
        tool=TOOL_NAME,
        version=__version__,
        max_m=summary.max_m,
        max_n=summary.max_n,
        jobs=summary.jobs,
        spec_count=summary.spec_count,
        closed_form_count=summary.closed_form_count,
        checks=list(summary.checks),
        failure_count=summary.failure_count,
        first_failure=summary.first_failure,
        passed=summary.passed,
    )
    if request.timing:
        report.timing_ms = round((time.perf_counter() - started) * 1000, 3)
    return report
