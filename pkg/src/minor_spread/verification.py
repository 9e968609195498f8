"""Named verification checks and the exhaustive spec sweep.

``verify_spec`` runs the full oracle battery on one spec; ``run_sweep``
enumerates every valid spec inside a bounding box and runs the cheap subset
(formula vs. rank oracles, Birkhoff duality) on each.  Sweep results are
aggregated in enumeration order, so output is deterministic regardless of
worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterator, Optional

from .errors import InvalidSpec, SizeBoundExceeded
from .hibi import (
    a_invariant,
    asl_hilbert_function,
    birkhoff_check,
    hibi_hilbert_function,
    reciprocity_check,
)
from .invariants import analytic_spread, reduction_number
from .lattices import ProblemSpec, build_d1, build_d2, build_theta

VERIFY_CHECKS = (
    "spread_formula_vs_rank_oracle",
    "reduction_formula_vs_rank_oracle",
    "birkhoff_witness",
    "hilbert_transport",
    "a_invariant_interior_search",
    "stanley_reciprocity",
)

SWEEP_CHECKS = VERIFY_CHECKS[:3]

# mutation targets for the negative-control mode
_CORRUPTIBLE = ("spread_formula", "reduction_formula")

# the Hilbert fits run through degree |P|+1; keep that bounded
VERIFY_P_SIZE_CAP = 24


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def verify_spec(
    spec: ProblemSpec, d_max: int = 4, corrupt: Optional[str] = None
) -> list[CheckResult]:
    """Run every named check; a ``corrupt`` target deliberately breaks one
    closed form so tests can prove the harness catches disagreements."""
    if corrupt is not None and corrupt not in _CORRUPTIBLE:
        raise InvalidSpec(f"unknown mutation target {corrupt!r}; use one of {_CORRUPTIBLE}")
    results = []
    d1, d2 = build_d1(spec), build_d2(spec)
    theta = build_theta(spec, d1, d2)
    p = theta.join_irreducibles()
    if len(p) > VERIFY_P_SIZE_CAP:
        raise SizeBoundExceeded(
            f"verify fits Hilbert numerators through degree |P|+1 and needs "
            f"|P| <= {VERIFY_P_SIZE_CAP}; this spec has |P| = {len(p)}"
        )

    spread = analytic_spread(spec) + (1 if corrupt == "spread_formula" else 0)
    spread_oracle = theta.rank() + 1
    results.append(
        CheckResult(
            "spread_formula_vs_rank_oracle",
            spread == spread_oracle,
            f"closed form {spread}, rank oracle {spread_oracle}",
        )
    )

    reduction = reduction_number(spec) + (1 if corrupt == "reduction_formula" else 0)
    reduction_oracle = spread_oracle - (p.rank() + 2)
    results.append(
        CheckResult(
            "reduction_formula_vs_rank_oracle",
            reduction == reduction_oracle,
            f"closed form {reduction}, rank oracle {reduction_oracle}",
        )
    )

    ok, _ = birkhoff_check(theta)
    results.append(
        CheckResult(
            "birkhoff_witness",
            ok,
            f"lattice of {len(theta)} minors vs ideals of {len(p)} join-irreducibles",
        )
    )

    ring = asl_hilbert_function(theta, d_max)
    transported = hibi_hilbert_function(p, d_max)
    results.append(
        CheckResult(
            "hilbert_transport",
            ring.values == transported.values,
            f"multichain counts {list(ring.values)} vs map counts {list(transported.values)}",
        )
    )

    try:
        a_value = a_invariant(p)
        a_ok = a_value == -(p.rank() + 2)
        a_detail = f"search found {a_value}, rank gives {-(p.rank() + 2)}"
    except AssertionError as exc:  # search and formula disagreed
        a_ok, a_detail = False, str(exc)
    results.append(CheckResult("a_invariant_interior_search", a_ok, a_detail))

    reciprocity_d_max = max(d_max, len(p) + 1)
    results.append(
        CheckResult(
            "stanley_reciprocity",
            reciprocity_check(p, reciprocity_d_max),
            f"numerators fitted through degree {reciprocity_d_max}",
        )
    )
    return results


def iter_specs(max_m: int, max_n: int) -> Iterator[ProblemSpec]:
    """Every valid spec with m <= max_m and n <= max_n, in a fixed
    enumeration order (m, n, r, a, b, u ascending)."""
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for r in range(1, min(m, n) + 1):
                for a in combinations(range(1, m + 1), r):
                    for b in combinations(range(1, n + 1), r):
                        for u in range(a[0], m + 1):
                            yield ProblemSpec(m, n, r, a, b, u)


def count_specs(max_m: int, max_n: int) -> int:
    """Closed-form spec count, independent of the enumeration: for each
    (m, n, r), choices of b are C(n, r) and choices of (a, u) group by the
    first entry of a."""
    total = 0
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            for r in range(1, min(m, n) + 1):
                a_u = sum(
                    comb(m - first, r - 1) * (m - first + 1)
                    for first in range(1, m + 1)
                )
                total += a_u * comb(n, r)
    return total


def _sweep_one(spec: ProblemSpec) -> Optional[tuple[str, str]]:
    """Run the cheap checks; return (check name, detail) for the first
    failure, or None when all pass."""
    d1, d2 = build_d1(spec), build_d2(spec)
    theta = build_theta(spec, d1, d2)
    p = theta.join_irreducibles()

    spread, spread_oracle = analytic_spread(spec), theta.rank() + 1
    if spread != spread_oracle:
        return ("spread_formula_vs_rank_oracle", f"{spread} != {spread_oracle}")
    reduction = reduction_number(spec)
    reduction_oracle = spread_oracle - (p.rank() + 2)
    if reduction != reduction_oracle:
        return ("reduction_formula_vs_rank_oracle", f"{reduction} != {reduction_oracle}")
    ok, _ = birkhoff_check(theta)
    if not ok:
        return ("birkhoff_witness", "witness map is not an order isomorphism")
    return None


@dataclass(frozen=True)
class SweepSummary:
    max_m: int
    max_n: int
    jobs: int
    spec_count: int
    closed_form_count: int
    checks: tuple
    failure_count: int
    first_failure: Optional[dict]

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.spec_count == self.closed_form_count


def run_sweep(max_m: int, max_n: int, jobs: int = 1) -> SweepSummary:
    """Enumerate and check every spec in the box; aggregation follows the
    enumeration order so the summary is identical for any job count."""
    if max_m < 1 or max_n < 1:
        raise InvalidSpec("sweep bounds must be at least 1")
    if jobs < 1:
        raise InvalidSpec("jobs must be at least 1")
    specs = list(iter_specs(max_m, max_n))
    if jobs == 1:
        outcomes = map(_sweep_one, specs)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_sweep_one, specs, chunksize=64))
    failure_count = 0
    first_failure = None
    for spec, outcome in zip(specs, outcomes):
        if outcome is not None:
            failure_count += 1
            if first_failure is None:
                name, detail = outcome
                first_failure = {
                    "spec": spec.to_mapping(),
                    "check": name,
                    "detail": detail,
                }
    return SweepSummary(
        max_m=max_m,
        max_n=max_n,
        jobs=jobs,
        spec_count=len(specs),
        closed_form_count=count_specs(max_m, max_n),
        checks=SWEEP_CHECKS,
        failure_count=failure_count,
        first_failure=first_failure,
    )
