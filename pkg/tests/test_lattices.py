"""Tests for the tuple lattices, the minor lattice, and join-irreducibles.

Expected values marked as derived were computed with an independent
brute-force enumeration (componentwise order + cover counting) before
being frozen here.
"""

import pytest

from minor_spread.errors import InvalidSpec, NoMaximalMinors, NotJoinIrreducible
from minor_spread.lattices import (
    Minor,
    ProblemSpec,
    admissible_tuples,
    bottom_tuple,
    build_d1,
    build_d2,
    build_theta,
    determine_k,
    join_irreducible_pivot,
    l_indices,
    l_indices_literal,
    minimal_join_irreducibles,
    minor_label,
    profile,
    theta_join_irreducibles,
    top_tuple,
    tuple_label,
)
from minor_spread.posets import is_order_isomorphism

EXAMPLE = ProblemSpec(
    m=13, n=13, r=8, a=(1, 2, 3, 7, 8, 10, 11, 12), b=(1, 2, 3, 7, 8, 10, 11, 12), u=13
)

GAMMA_1 = (1, 2, 4, 7, 8, 10, 11, 12)
GAMMA_2 = (1, 2, 3, 7, 9, 10, 11, 12)
GAMMA_3 = (1, 2, 3, 7, 8, 10, 11, 13)


def small_spec(m=3, n=3, r=3, a=(1, 2, 3), b=(1, 2, 3), u=2):
    return ProblemSpec(m, n, r, a, b, u)


class TestProblemSpec:
    def test_example_k(self):
        assert EXAMPLE.k == 8

    def test_k_when_u_between_bounds(self):
        assert small_spec().k == 2

    def test_no_maximal_minors(self):
        with pytest.raises(NoMaximalMinors):
            ProblemSpec(m=5, n=5, r=2, a=(2, 4), b=(1, 2), u=1)

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(m=0, n=3, r=1, a=(1,), b=(1,), u=1),
            dict(m=3, n=3, r=0, a=(), b=(), u=1),
            dict(m=3, n=3, r=4, a=(1, 2, 3), b=(1, 2, 3), u=1),
            dict(m=3, n=3, r=2, a=(2, 2), b=(1, 2), u=2),
            dict(m=3, n=3, r=2, a=(1, 4), b=(1, 2), u=2),
            dict(m=3, n=3, r=2, a=(1, 2), b=(1, 2), u=0),
            dict(m=3, n=3, r=2, a=(1, 2), b=(1, 2), u=4),
            dict(m=3, n=3, r=2, a=(1, 2), b=(0, 2), u=2),
        ],
    )
    def test_invalid_specs(self, kwargs):
        with pytest.raises(InvalidSpec):
            ProblemSpec(**kwargs)

    def test_determine_k_cases(self):
        assert determine_k((1, 2, 3, 7, 8, 10, 11, 12), 13) == 8
        assert determine_k((1, 2, 3), 2) == 2
        with pytest.raises(NoMaximalMinors):
            determine_k((2, 4), 1)

    def test_mapping_round_trip(self):
        doc = EXAMPLE.to_mapping()
        assert ProblemSpec.from_mapping(doc) == EXAMPLE

    def test_mapping_missing_field(self):
        with pytest.raises(InvalidSpec):
            ProblemSpec.from_mapping({"m": 3, "n": 3})


class TestTupleLattices:
    def test_d2_three_chain(self):
        # n=3, k=2, b=(1,2): the three pairs form a chain
        spec = ProblemSpec(m=3, n=3, r=2, a=(1, 2), b=(1, 2), u=3)
        d2 = build_d2(spec)
        assert list(d2.elements) == [(1, 2), (1, 3), (2, 3)]
        assert d2.cover_pairs() == [((1, 2), (1, 3)), ((1, 3), (2, 3))]

    def test_singleton_when_top_is_bottom(self):
        spec = ProblemSpec(m=2, n=3, r=2, a=(1, 2), b=(1, 2), u=2)
        d1 = build_d1(spec)
        assert list(d1.elements) == [(1, 2)]

    def test_example_endpoints(self):
        assert bottom_tuple(EXAMPLE, "rows") == (1, 2, 3, 7, 8, 10, 11, 12)
        assert top_tuple(EXAMPLE, "rows") == (6, 7, 8, 9, 10, 11, 12, 13)

    def test_example_d1_size(self):
        # frozen from an independent backtracking enumeration
        assert len(admissible_tuples(EXAMPLE, "rows")) == 411

    def test_tuples_are_admissible(self):
        spec = small_spec(m=5, n=5, r=3, a=(1, 3, 4), b=(2, 3, 5), u=5)
        base, cap = spec.side_bounds("rows")
        for t in admissible_tuples(spec, "rows"):
            assert all(x < y for x, y in zip(t, t[1:]))
            assert all(t[i] >= base[i] for i in range(spec.k))
            assert t[-1] <= cap

    def test_theta_is_product(self):
        spec = small_spec()
        d1, d2 = build_d1(spec), build_d2(spec)
        theta = build_theta(spec, d1, d2)
        assert len(theta) == len(d1) * len(d2)
        assert theta.rank() == d1.rank() + d2.rank()

    def test_theta_three_chain(self):
        theta = build_theta(small_spec())
        assert len(theta) == 3
        assert theta.rank() == 2
        assert theta.elements[0] == Minor((1, 2), (1, 2))

    def test_theta_matches_direct_enumeration(self):
        # theta == all minors between bottom and top in the componentwise order
        spec = small_spec(m=4, n=4, r=2, a=(1, 3), b=(2, 3), u=4)
        theta = build_theta(spec)
        lo = Minor(bottom_tuple(spec, "rows"), bottom_tuple(spec, "columns"))
        hi = Minor(top_tuple(spec, "rows"), top_tuple(spec, "columns"))
        from itertools import combinations

        direct = []
        for rows in combinations(range(1, spec.u + 1), spec.k):
            for cols in combinations(range(1, spec.n + 1), spec.k):
                gamma = Minor(rows, cols)
                within = all(
                    all(x <= y for x, y in zip(low, g)) and all(x <= y for x, y in zip(g, high))
                    for low, g, high in [(lo.rows, gamma.rows, hi.rows), (lo.cols, gamma.cols, hi.cols)]
                )
                if within:
                    direct.append(gamma)
        assert sorted(direct) == sorted(theta.elements)

    def test_labels(self):
        assert tuple_label((1, 2, 10)) == "[1,2,10]"
        assert minor_label(Minor((1, 2), (3, 4))) == "[1,2|3,4]"

    def test_join_meet_are_componentwise(self):
        theta = build_theta(small_spec(m=4, n=4, r=2, a=(1, 3), b=(2, 3), u=4))
        check = theta.lattice_check()
        assert check.is_lattice and check.is_distributive
        for g in theta:
            for h in theta:
                expected_join = Minor(
                    tuple(map(max, zip(g.rows, h.rows))), tuple(map(max, zip(g.cols, h.cols)))
                )
                expected_meet = Minor(
                    tuple(map(min, zip(g.rows, h.rows))), tuple(map(min, zip(g.cols, h.cols)))
                )
                assert check.join(g, h) == expected_join
                assert check.meet(g, h) == expected_meet


class TestJoinIrreducibles:
    def test_three_chain_irreducibles(self):
        spec = ProblemSpec(m=3, n=3, r=2, a=(1, 2), b=(1, 2), u=3)
        p = build_d1(spec).join_irreducibles()
        assert list(p.elements) == [(1, 3), (2, 3)]
        assert p.rank() == 1

    def test_example_minimal_irreducibles(self):
        p1 = build_d1(EXAMPLE).join_irreducibles()
        assert sorted(p1.minimal_elements()) == sorted([GAMMA_1, GAMMA_2, GAMMA_3])
        assert len(p1) == 22
        assert p1.rank() == 7

    def test_singleton_lattice_has_none(self):
        spec = ProblemSpec(m=2, n=3, r=2, a=(1, 2), b=(1, 2), u=2)
        assert len(build_d1(spec).join_irreducibles()) == 0

    def test_pivot_examples(self):
        assert join_irreducible_pivot(GAMMA_1, EXAMPLE, "rows") == 3
        assert join_irreducible_pivot(bottom_tuple(EXAMPLE, "rows"), EXAMPLE, "rows") is None
        assert join_irreducible_pivot((6, 7, 8, 9, 10, 11, 12, 13), EXAMPLE, "rows") == 1

    def test_pivot_agrees_with_cover_count(self):
        spec = small_spec(m=5, n=4, r=2, a=(2, 4), b=(1, 3), u=5)
        for side, lattice in (("rows", build_d1(spec)), ("columns", build_d2(spec))):
            for t in lattice:
                unique_pivot = join_irreducible_pivot(t, spec, side) is not None
                assert unique_pivot == (len(lattice.lower_covers(t)) == 1)

    def test_profile_examples(self):
        assert profile(GAMMA_1, EXAMPLE, "rows") == (4, 2, 3)
        assert profile(GAMMA_3, EXAMPLE, "rows") == (0, 7, 8)
        assert profile((6, 7, 8, 9, 10, 11, 12, 13), EXAMPLE, "rows") == (0, 0, 1)

    def test_profile_rejects_reducible(self):
        with pytest.raises(NotJoinIrreducible):
            profile(bottom_tuple(EXAMPLE, "rows"), EXAMPLE, "rows")

    def test_profile_is_order_reversing_bijection(self):
        p1 = build_d1(EXAMPLE).join_irreducibles()
        prof = {t: profile(t, EXAMPLE, "rows") for t in p1}
        assert len({(v.p, v.q) for v in prof.values()}) == len(prof)
        for s in p1:
            for t in p1:
                below = p1.leq(s, t)
                reversed_dominates = prof[s].p >= prof[t].p and prof[s].q >= prof[t].q
                assert below == reversed_dominates
        for t in p1:
            assert p1.coheight(t) == prof[t].p + prof[t].q

    def test_profile_image_is_staircase(self):
        p1 = build_d1(EXAMPLE).join_irreducibles()
        image = {(v.p, v.q) for v in (profile(t, EXAMPLE, "rows") for t in p1)}
        for p, q in image:
            for p2 in range(p + 1):
                for q2 in range(q + 1):
                    assert (p2, q2) in image


class TestLIndices:
    def test_example_rows(self):
        assert l_indices(EXAMPLE, "rows") == (3, 5, 8)

    def test_corrected_vs_literal_column_case(self):
        # n=3, k=2, b=(1,2,3): the corrected set sees the bumpable last
        # entry; the literal set compares against b_3 and misses it.
        spec = small_spec()
        assert l_indices(spec, "columns") == (2,)
        assert l_indices_literal(spec, "columns") == ()

    def test_rows_literal_agrees(self):
        for spec in [
            EXAMPLE,
            small_spec(),
            small_spec(m=5, n=5, r=3, a=(1, 3, 4), b=(2, 3, 5), u=5),
            small_spec(m=4, n=4, r=2, a=(2, 4), b=(1, 3), u=3),
        ]:
            assert l_indices(spec, "rows") == l_indices_literal(spec, "rows")

    def test_both_singletons(self):
        spec = ProblemSpec(m=2, n=2, r=2, a=(1, 2), b=(1, 2), u=2)
        assert l_indices(spec, "rows") == ()
        assert l_indices(spec, "columns") == ()

    def test_example_minimal_with_coheights(self):
        got = minimal_join_irreducibles(EXAMPLE, "rows")
        assert got == [(GAMMA_1, 6), (GAMMA_2, 5), (GAMMA_3, 7)]

    def test_minimal_matches_poset_route(self):
        for spec in [
            EXAMPLE,
            small_spec(),
            small_spec(m=5, n=5, r=3, a=(1, 3, 4), b=(2, 3, 5), u=5),
        ]:
            for side, build in (("rows", build_d1), ("columns", build_d2)):
                p = build(spec).join_irreducibles()
                by_formula = minimal_join_irreducibles(spec, side)
                assert sorted(t for t, _ in by_formula) == sorted(p.minimal_elements())
                for t, coheight in by_formula:
                    assert p.coheight(t) == coheight

    def test_small_chain_case(self):
        spec = ProblemSpec(m=3, n=3, r=2, a=(1, 2), b=(1, 2), u=3)
        assert l_indices(spec, "rows") == (2,)
        assert minimal_join_irreducibles(spec, "rows") == [((1, 3), 1)]

    def test_formula_matches_poset_across_small_sweep(self):
        # every spec with m, n <= 3: the corrected index set must reproduce
        # the cover-count minimal elements and coheights on both sides
        from minor_spread.verification import iter_specs

        for spec in iter_specs(3, 3):
            for side, build in (("rows", build_d1), ("columns", build_d2)):
                p = build(spec).join_irreducibles()
                by_formula = minimal_join_irreducibles(spec, side)
                assert sorted(t for t, _ in by_formula) == sorted(p.minimal_elements()), (
                    spec,
                    side,
                )
                for t, coheight in by_formula:
                    assert p.coheight(t) == coheight, (spec, side, t)


class TestThetaJoinIrreducibles:
    def test_matches_product_route(self):
        for spec in [
            small_spec(),
            small_spec(m=4, n=4, r=4, a=(1, 2, 3, 4), b=(1, 2, 3, 4), u=2),
            small_spec(m=5, n=4, r=2, a=(2, 4), b=(1, 3), u=5),
        ]:
            direct = theta_join_irreducibles(spec)
            via_theta = build_theta(spec).join_irreducibles()
            assert sorted(direct.elements) == sorted(via_theta.elements)
            assert is_order_isomorphism(direct, via_theta, {x: x for x in direct})

    def test_union_structure(self):
        spec = small_spec(m=4, n=4, r=2, a=(1, 3), b=(2, 3), u=4)
        d1, d2 = build_d1(spec), build_d2(spec)
        p = theta_join_irreducibles(spec, d1, d2)
        union = d1.join_irreducibles().disjoint_union(d2.join_irreducibles())
        bot1, bot2 = bottom_tuple(spec, "rows"), bottom_tuple(spec, "columns")
        mapping = {}
        for tag, t in union:
            mapping[(tag, t)] = Minor(t, bot2) if tag == 0 else Minor(bot1, t)
        assert is_order_isomorphism(union, p, mapping)
