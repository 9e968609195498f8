"""Bundled reference case with frozen expected values.

One fully worked spec ships with the tool as a drift alarm: every value
below was computed independently (bump positions and coheights by the
closed formulas, the join-irreducible poset by cover counting on the
materialized row lattice) and frozen.  ``reference_report`` recomputes
everything and raises SelfCheckFailed on any mismatch, so a regression in
any layer turns the ``example`` command red.
"""

from __future__ import annotations

from .errors import SelfCheckFailed
from .invariants import InvariantReport, full_report
from .lattices import (
    ProblemSpec,
    build_d1,
    build_d2,
    l_indices,
    minimal_join_irreducibles,
)

REFERENCE_SPEC = ProblemSpec(
    m=13,
    n=13,
    r=8,
    a=(1, 2, 3, 7, 8, 10, 11, 12),
    b=(1, 2, 3, 7, 8, 10, 11, 12),
    u=13,
)

EXPECTED = {
    "k": 8,
    "row_l_indices": (3, 5, 8),
    "minimal_join_irreducibles": (
        ((1, 2, 4, 7, 8, 10, 11, 12), 6),
        ((1, 2, 3, 7, 9, 10, 11, 12), 5),
        ((1, 2, 3, 7, 8, 10, 11, 13), 7),
    ),
    "rank_p1": 7,
    "analytic_spread": 45,
    "reduction_number": 36,
}


def _require(condition: bool, what: str, got, expected) -> None:
    if not condition:
        raise SelfCheckFailed(f"reference drift in {what}: got {got!r}, expected {expected!r}")


def reference_report() -> tuple[dict, InvariantReport]:
    """Recompute the reference case and compare with the frozen values.

    Returns (row-side reproduction, full invariant report with oracle).
    """
    spec = REFERENCE_SPEC
    _require(spec.k == EXPECTED["k"], "k", spec.k, EXPECTED["k"])

    l_set = l_indices(spec, "rows")
    _require(l_set == EXPECTED["row_l_indices"], "row bump positions", l_set,
             EXPECTED["row_l_indices"])

    by_formula = tuple(minimal_join_irreducibles(spec, "rows"))
    _require(
        by_formula == EXPECTED["minimal_join_irreducibles"],
        "minimal join-irreducibles (formula route)",
        by_formula,
        EXPECTED["minimal_join_irreducibles"],
    )

    d1 = build_d1(spec)
    p1 = d1.join_irreducibles()
    by_poset = sorted(p1.minimal_elements())
    expected_tuples = sorted(t for t, _ in EXPECTED["minimal_join_irreducibles"])
    _require(
        by_poset == expected_tuples,
        "minimal join-irreducibles (cover-count route)",
        by_poset,
        expected_tuples,
    )
    for t, coheight in by_formula:
        _require(
            p1.coheight(t) == coheight,
            f"coheight of {t}",
            p1.coheight(t),
            coheight,
        )
    _require(p1.rank() == EXPECTED["rank_p1"], "rank of row join-irreducibles",
             p1.rank(), EXPECTED["rank_p1"])

    d2 = build_d2(spec)
    report = full_report(spec, with_oracle=True, d1=d1, d2=d2)
    _require(
        report.analytic_spread == EXPECTED["analytic_spread"],
        "analytic spread",
        report.analytic_spread,
        EXPECTED["analytic_spread"],
    )
    _require(
        report.reduction_number == EXPECTED["reduction_number"],
        "reduction number",
        report.reduction_number,
        EXPECTED["reduction_number"],
    )
    _require(bool(report.spread_agrees), "spread formula/oracle agreement",
             report.spread_agrees, True)
    _require(bool(report.reduction_agrees), "reduction formula/oracle agreement",
             report.reduction_agrees, True)

    row_block = {
        "l_indices": list(l_set),
        "minimal_join_irreducibles": [
            {"entries": list(t), "coheight": c} for t, c in by_formula
        ],
        "rank_p1": p1.rank(),
    }
    return row_block, report
