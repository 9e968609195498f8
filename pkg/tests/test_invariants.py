"""Closed forms against rank oracles and frozen derived values."""

import pytest

from minor_spread.errors import NoMaximalMinors
from minor_spread.invariants import (
    analytic_spread,
    analytic_spread_oracle,
    full_report,
    rank_p,
    reduction_number,
    reduction_number_oracle,
)
from minor_spread.lattices import ProblemSpec

EXAMPLE = ProblemSpec(
    m=13, n=13, r=8, a=(1, 2, 3, 7, 8, 10, 11, 12), b=(1, 2, 3, 7, 8, 10, 11, 12), u=13
)

SINGLETON = ProblemSpec(m=2, n=2, r=2, a=(1, 2), b=(1, 2), u=2)

GENERIC_2X3 = ProblemSpec(m=3, n=3, r=3, a=(1, 2, 3), b=(1, 2, 3), u=2)


class TestClosedForms:
    def test_singleton_theta(self):
        assert analytic_spread(SINGLETON) == 1
        assert reduction_number(SINGLETON) == 0
        assert rank_p(SINGLETON) == -1

    def test_generic_2x3(self):
        assert analytic_spread(GENERIC_2X3) == 3
        assert rank_p(GENERIC_2X3) == 1
        assert reduction_number(GENERIC_2X3) == 0

    def test_example_values(self):
        assert analytic_spread(EXAMPLE) == 45
        assert rank_p(EXAMPLE) == 7
        assert reduction_number(EXAMPLE) == 36

    def test_grassmannian_case(self):
        # identity bounds with u <= r: spread is u(n-u)+1
        for n in range(2, 6):
            for u in range(1, n):
                spec = ProblemSpec(
                    m=n, n=n, r=n, a=tuple(range(1, n + 1)), b=tuple(range(1, n + 1)), u=u
                )
                assert analytic_spread(spec) == u * (n - u) + 1


class TestOracles:
    def test_singleton(self):
        assert analytic_spread_oracle(SINGLETON) == 1
        assert reduction_number_oracle(SINGLETON) == 0

    def test_generic_2x3(self):
        assert analytic_spread_oracle(GENERIC_2X3) == 3
        assert reduction_number_oracle(GENERIC_2X3) == 0

    def test_derived_4x4_case(self):
        # frozen from an independent product-order enumeration: ell=5, r=1
        spec = ProblemSpec(m=4, n=4, r=4, a=(1, 2, 3, 4), b=(1, 2, 3, 4), u=2)
        assert analytic_spread(spec) == 5
        assert analytic_spread_oracle(spec) == 5
        assert reduction_number(spec) == 1
        assert reduction_number_oracle(spec) == 1

    def test_factored_fallback_matches_materialized(self):
        # force the fallback path on a spec small enough to also materialize
        spec = ProblemSpec(m=5, n=5, r=3, a=(1, 3, 4), b=(2, 3, 5), u=5)
        assert analytic_spread_oracle(spec) == analytic_spread_oracle(
            spec, materialize_limit=1
        )
        assert reduction_number_oracle(spec) == reduction_number_oracle(
            spec, materialize_limit=1
        )

    def test_example_oracles_via_fallback(self):
        # |theta| = 411^2 exceeds the matrix cap, so this exercises the
        # factored route end to end
        assert analytic_spread_oracle(EXAMPLE) == 45
        assert reduction_number_oracle(EXAMPLE) == 36


class TestFullReport:
    def test_example_report(self):
        rep = full_report(EXAMPLE)
        assert rep.k == 8
        assert rep.analytic_spread == 45
        assert rep.reduction_number == 36
        assert rep.rank_p == 7
        assert rep.row_l_indices == (3, 5, 8)
        assert rep.d1_size == 411
        assert rep.p1_size == 22
        assert rep.theta_size == 411 * 411
        assert rep.spread_agrees and rep.reduction_agrees

    def test_singleton_report(self):
        rep = full_report(SINGLETON)
        assert rep.analytic_spread == 1
        assert rep.reduction_number == 0
        assert rep.rank_p == -1
        assert rep.theta_size == 1

    def test_report_without_oracle(self):
        rep = full_report(GENERIC_2X3, with_oracle=False)
        assert rep.analytic_spread_oracle is None
        assert rep.spread_agrees is None
        assert rep.analytic_spread == 3

    def test_invalid_spec_propagates(self):
        with pytest.raises(NoMaximalMinors):
            ProblemSpec(m=5, n=5, r=2, a=(2, 4), b=(1, 2), u=1)


class TestProperties:
    def test_monotone_in_n(self):
        # enlarging n (holding everything else) never decreases the spread
        specs = [
            ProblemSpec(m=4, n=4, r=2, a=(1, 3), b=(2, 4), u=3),
            ProblemSpec(m=5, n=5, r=3, a=(1, 3, 4), b=(1, 2, 4), u=4),
            GENERIC_2X3,
        ]
        for spec in specs:
            bigger = ProblemSpec(spec.m, spec.n + 1, spec.r, spec.a, spec.b, spec.u)
            assert analytic_spread(bigger) >= analytic_spread(spec)

    def test_bounds_always_hold(self):
        for spec in [EXAMPLE, SINGLETON, GENERIC_2X3]:
            assert analytic_spread(spec) >= 1
            assert reduction_number(spec) >= 0
