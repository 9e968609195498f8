"""Closed-form invariants and their lattice-rank oracle counterparts.

The closed forms are pure integer arithmetic in the spec data.  The oracles
rebuild the actual posets and measure longest chains, sharing nothing with
the formulas.  When the minor lattice itself is too large to materialize,
the oracle falls back on ranks of the two factors (rank of a product is the
sum of factor ranks; verified as a poset-engine property at small scale).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .lattices import (
    ProblemSpec,
    admissible_tuples,
    build_d1,
    build_d2,
    build_theta,
    coheight_formula,
    join_irreducible_pivot,
    l_indices,
    theta_join_irreducibles,
)
from .posets import MAX_POSET_SIZE, Poset


def analytic_spread(spec: ProblemSpec) -> int:
    """Closed form: k(u + n - k + 1) - sum of the first k row and column
    bounds, plus one."""
    k, u, n = spec.k, spec.u, spec.n
    return k * (u + n - k + 1) - sum(spec.a[:k]) - sum(spec.b[:k]) + 1


def rank_p(spec: ProblemSpec) -> int:
    """Closed form for the rank of the join-irreducible poset: the largest
    coheight over the bumpable positions of both sides, -1 when there are
    none (both tuple lattices are singletons)."""
    values = [coheight_formula(spec, "rows", l) for l in l_indices(spec, "rows")]
    values += [coheight_formula(spec, "columns", l) for l in l_indices(spec, "columns")]
    return max(values, default=-1)


def reduction_number(spec: ProblemSpec) -> int:
    """Closed form: analytic spread minus (rank of the join-irreducible
    poset + 2)."""
    return analytic_spread(spec) - (rank_p(spec) + 2)


def analytic_spread_oracle(
    spec: ProblemSpec,
    d1: Optional[Poset] = None,
    d2: Optional[Poset] = None,
    materialize_limit: int = MAX_POSET_SIZE,
) -> int:
    """rank(minor lattice) + 1, measured on the cover graph.

    Falls back to rank(d1) + rank(d2) + 1 when the product would exceed the
    dense-matrix cap.
    """
    d1 = build_d1(spec) if d1 is None else d1
    d2 = build_d2(spec) if d2 is None else d2
    if len(d1) * len(d2) <= materialize_limit:
        return build_theta(spec, d1, d2).rank() + 1
    return d1.rank() + d2.rank() + 1


def reduction_number_oracle(
    spec: ProblemSpec,
    d1: Optional[Poset] = None,
    d2: Optional[Poset] = None,
    materialize_limit: int = MAX_POSET_SIZE,
) -> int:
    """analytic-spread oracle minus (rank of the measured join-irreducible
    subposet + 2).

    The join-irreducibles come from cover counting on the materialized minor
    lattice when it fits, otherwise from the factorwise construction (pairs
    with one join-irreducible coordinate and one bottom coordinate).
    """
    d1 = build_d1(spec) if d1 is None else d1
    d2 = build_d2(spec) if d2 is None else d2
    spread = analytic_spread_oracle(spec, d1, d2, materialize_limit)
    if len(d1) * len(d2) <= materialize_limit:
        p = build_theta(spec, d1, d2).join_irreducibles()
    else:
        p = theta_join_irreducibles(spec, d1, d2)
    return spread - (p.rank() + 2)


@dataclass(frozen=True)
class InvariantReport:
    """Everything the calculator knows about one spec.

    Closed-form fields are always present; the oracle fields are populated
    only when the independent recomputation was requested.
    """

    k: int
    analytic_spread: int
    reduction_number: int
    rank_theta: int
    rank_p: int
    row_l_indices: tuple
    column_l_indices: tuple
    d1_size: int
    d2_size: int
    theta_size: int
    p1_size: int
    p2_size: int
    analytic_spread_oracle: Optional[int] = None
    reduction_number_oracle: Optional[int] = None
    rank_theta_oracle: Optional[int] = None
    rank_p_oracle: Optional[int] = None
    spread_agrees: Optional[bool] = None
    reduction_agrees: Optional[bool] = None


def full_report(
    spec: ProblemSpec,
    with_oracle: bool = True,
    d1: Optional[Poset] = None,
    d2: Optional[Poset] = None,
) -> InvariantReport:
    """Closed forms, sizes, and (optionally) the oracle recomputation with
    agreement flags.  Prebuilt factor lattices may be passed in to avoid
    rebuilding them."""
    spread = analytic_spread(spec)
    reduction = reduction_number(spec)
    rank_p_value = rank_p(spec)
    assert spread >= 1 and reduction >= 0

    row_tuples = admissible_tuples(spec, "rows")
    col_tuples = admissible_tuples(spec, "columns")
    p1_size = sum(
        1 for t in row_tuples if join_irreducible_pivot(t, spec, "rows") is not None
    )
    p2_size = sum(
        1 for t in col_tuples if join_irreducible_pivot(t, spec, "columns") is not None
    )

    oracle_kwargs: dict = {}
    if with_oracle:
        d1 = build_d1(spec) if d1 is None else d1
        d2 = build_d2(spec) if d2 is None else d2
        spread_oracle = analytic_spread_oracle(spec, d1, d2)
        reduction_oracle = reduction_number_oracle(spec, d1, d2)
        oracle_kwargs = dict(
            analytic_spread_oracle=spread_oracle,
            reduction_number_oracle=reduction_oracle,
            rank_theta_oracle=spread_oracle - 1,
            rank_p_oracle=spread_oracle - reduction_oracle - 2,
            spread_agrees=spread == spread_oracle,
            reduction_agrees=reduction == reduction_oracle,
        )

    return InvariantReport(
        k=spec.k,
        analytic_spread=spread,
        reduction_number=reduction,
        rank_theta=spread - 1,
        rank_p=rank_p_value,
        row_l_indices=l_indices(spec, "rows"),
        column_l_indices=l_indices(spec, "columns"),
        d1_size=len(row_tuples),
        d2_size=len(col_tuples),
        theta_size=len(row_tuples) * len(col_tuples),
        p1_size=p1_size,
        p2_size=p2_size,
        **oracle_kwargs,
    )
