"""Pydantic request/response models for the HTTP surface.

Field declaration order is the wire order; the CLI re-serializes responses
with a canonical renderer, so model order is what makes output bit-stable.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from .lattices import ProblemSpec

WhichPoset = Literal["theta", "d1", "d2", "p", "p1", "p2"]


class SpecDocument(BaseModel):
    """Wire form of a problem spec; 1-based indices throughout."""

    model_config = ConfigDict(extra="forbid")

    m: int
    n: int
    r: int
    a: list[int]
    b: list[int]
    u: int

    def to_problem_spec(self) -> ProblemSpec:
        return ProblemSpec(self.m, self.n, self.r, tuple(self.a), tuple(self.b), self.u)

    @classmethod
    def from_problem_spec(cls, spec: ProblemSpec) -> "SpecDocument":
        return cls(**spec.to_mapping())


class ComputeRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    spec: SpecDocument
    with_oracle: bool = False
    timing: bool = False


class SizesBlock(BaseModel):
    d1: int
    d2: int
    theta: int
    p1: int
    p2: int


class OracleBlock(BaseModel):
    analytic_spread: int
    reduction_number: int
    rank_theta: int
    rank_p: int
    spread_agrees: bool
    reduction_agrees: bool


class ComputeReport(BaseModel):
    tool: str
    version: str
    spec: SpecDocument
    k: int
    analytic_spread: int
    reduction_number: int
    rank_theta: int
    rank_p: int
    row_l_indices: list[int]
    column_l_indices: list[int]
    sizes: SizesBlock
    oracle: Optional[OracleBlock] = None
    timing_ms: Optional[float] = None


class HasseRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    spec: SpecDocument
    which: WhichPoset = "theta"
    max_nodes: int = 500


class HasseReport(BaseModel):
    tool: str
    version: str
    which: WhichPoset
    node_count: int
    sink_count: int
    dot: str


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    spec: SpecDocument
    d_max: int = 4
    mutate: Optional[str] = None
    timing: bool = False


class CheckOutcome(BaseModel):
    name: str
    passed: bool
    detail: str


class VerifyReport(BaseModel):
    tool: str
    version: str
    spec: SpecDocument
    d_max: int
    passed: bool
    checks: list[CheckOutcome]
    timing_ms: Optional[float] = None


class SweepRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    max_m: int = 5
    max_n: int = 5
    jobs: int = 1
    timing: bool = False


class SweepReport(BaseModel):
    tool: str
    version: str
    max_m: int
    max_n: int
    jobs: int
    spec_count: int
    closed_form_count: int
    checks: list[str]
    failure_count: int
    first_failure: Optional[dict] = None
    passed: bool
    timing_ms: Optional[float] = None


class MinimalIrreducible(BaseModel):
    entries: list[int]
    coheight: int


class ExampleRowBlock(BaseModel):
    l_indices: list[int]
    minimal_join_irreducibles: list[MinimalIrreducible]
    rank_p1: int


class ExampleReport(BaseModel):
    tool: str
    version: str
    spec: SpecDocument
    k: int
    row: ExampleRowBlock
    report: ComputeReport
    self_check_passed: bool
    timing_ms: Optional[float] = None


class ErrorInfo(BaseModel):
    code: str
    message: str


class ErrorDocument(BaseModel):
    error: ErrorInfo
