"""Moment-graph membership tests for the six-fixed-point torus action."""

import random

import pytest

from flagoct.cohomology import B_RING
from flagoct.gkm import (
    RHO_RING,
    ROOT_TRANSPOSITIONS,
    CohTuple,
    abstract_label,
    bm_degrees,
    cached_realization,
    check_membership,
    displayed_euler_products,
    free_rank_check,
    gkm_edges,
    is_w_invariant,
    label_hyperplanes,
    p1_p2_equivalence,
    predicted_rank,
    random_arbitrary_tuple,
    random_membership_tuple,
    realized_label,
    restriction_class_tuple,
)
from flagoct.poly import exact_divide, pairwise_coprime
from flagoct.weyl import SIGMA3_NAMES, sigma3_by_name, transposition


class TestGraphShape:
    def test_nine_edges_six_vertices_valence_three(self):
        edges = gkm_edges()
        assert len(edges) == 9
        for name in SIGMA3_NAMES:
            assert sum(1 for e in edges if name in (e.u, e.v)) == 3

    def test_edges_join_left_translates_by_class_transposition(self):
        for e in gkm_edges():
            i, j = ROOT_TRANSPOSITIONS[e.k]
            t = transposition(i, j)
            assert t.compose(sigma3_by_name(e.u)).name == e.v

    def test_three_edges_per_class(self):
        by_class = {}
        for e in gkm_edges():
            by_class.setdefault(e.k, []).append(e)
        assert {k: len(v) for k, v in by_class.items()} == {1: 3, 2: 3, 3: 3}

    def test_edges_are_deduplicated(self):
        seen = {frozenset((e.u, e.v)) for e in gkm_edges()}
        assert len(seen) == 9


class TestEulerRealization:
    def test_realization_report(self):
        real = cached_realization()
        assert real.squares_match_display
        assert real.coprime
        assert real.passed

    def test_products_are_pairwise_coprime(self):
        prods = list(displayed_euler_products().values())
        ok, witness = pairwise_coprime(prods)
        assert ok and witness is None

    def test_each_product_has_four_linear_factors(self):
        for fp in displayed_euler_products().values():
            assert fp.nfactors == 4
            assert fp.expand().total_degree() == 4

    def test_canonical_signs_and_additivity(self):
        real = cached_realization()
        assert real.canonical_signs == (-1, 1, 1)
        assert real.additivity_with_canonical_signs
        c1, c2, c3 = (real.realized_label(k) for k in (1, 2, 3))
        assert c1 + c2 == c3

    def test_vanishing_combination(self):
        real = cached_realization()
        s1, s2, s3 = real.vanishing_combination
        combo = (
            s1 * real.b1T.expand()
            + s2 * real.b2T.expand()
            + s3 * real.b3T.expand()
        )
        assert combo.is_zero()

    def test_realized_labels_are_invariant(self):
        for k in (1, 2, 3):
            assert is_w_invariant(realized_label(k))

    def test_labels_factor_into_their_hyperplanes(self):
        for k in (1, 2, 3):
            label = realized_label(k)
            for form in label_hyperplanes(k):
                quotient = exact_divide(label, form.to_polynomial())
                assert quotient is not None


class TestMembership:
    def test_restriction_class_tuples_are_members(self):
        for k in (1, 2, 3):
            t = restriction_class_tuple(k)
            assert check_membership(t).ok

    def test_random_membership_tuples(self):
        rng = random.Random(0)
        for _ in range(10):
            t = random_membership_tuple(rng)
            result = check_membership(t)
            assert result.ok, result.reason

    def test_perturbed_tuple_fails_with_named_edge(self):
        t = restriction_class_tuple(1)
        entries = dict(t.entries)
        entries["s1"] = entries["s1"] + B_RING.one()
        bad = CohTuple("Hb", entries)
        result = check_membership(bad)
        assert not result.ok
        assert result.failing_edge is not None
        assert "s1" in (result.failing_edge.u, result.failing_edge.v)

    def test_constant_tuples_are_members(self):
        entries = {name: 5 * B_RING.one() for name in SIGMA3_NAMES}
        assert check_membership(CohTuple("Hb", entries)).ok

    def test_mode_validation(self):
        entries = {name: B_RING.one() for name in SIGMA3_NAMES}
        with pytest.raises(ValueError):
            CohTuple("XX", entries)
        missing = {name: B_RING.one() for name in SIGMA3_NAMES[:-1]}
        with pytest.raises(ValueError):
            CohTuple("Hb", missing)

    def test_realized_mode_rejects_non_invariant_entries(self):
        rho1 = RHO_RING.gens()[0]
        entries = {name: rho1 for name in SIGMA3_NAMES}
        result = check_membership(CohTuple("HT", entries))
        assert not result.ok
        assert "invariant" in result.reason

    def test_hyperplane_method_agrees_on_realized_tuples(self):
        # vertex entries built from the realized labels themselves are
        # invariant and satisfy membership (all differences vanish)
        entries = {
            name: realized_label(1) + 2 * realized_label(2)
            for name in SIGMA3_NAMES
        }
        t = CohTuple("HT", entries)
        assert check_membership(t, method="division").ok
        assert check_membership(t, method="hyperplanes").ok

    def test_hyperplane_method_requires_realized_mode(self):
        t = restriction_class_tuple(1)
        with pytest.raises(ValueError):
            check_membership(t, method="hyperplanes")


class TestPredicateEquivalence:
    def test_agreement_on_arbitrary_tuples(self):
        rng = random.Random(1)
        for _ in range(25):
            t = random_arbitrary_tuple(rng)
            restricted, full, agree = p1_p2_equivalence(t)
            assert agree
            assert restricted == full

    def test_members_pass_both(self):
        for k in (1, 2, 3):
            restricted, full, agree = p1_p2_equivalence(restriction_class_tuple(k))
            assert restricted and full and agree


class TestFreeness:
    EXPECTED = {0: 1, 2: 0, 4: 1, 6: 0, 8: 5, 10: 0, 12: 6, 14: 0, 16: 15}

    def test_base_degrees(self):
        assert tuple(sorted(bm_degrees())) == (4, 8, 8, 12)

    def test_rank_table_to_degree_eight(self):
        rows = free_rank_check(8)
        assert [(d, c) for (d, c, _) in rows] == [
            (d, self.EXPECTED[d]) for d in range(0, 9, 2)
        ]
        assert all(c == p for (_, c, p) in rows)

    def test_predicted_ranks_match_frozen_values(self):
        for d, expected in self.EXPECTED.items():
            assert predicted_rank(d) == expected

    def test_odd_degrees_vanish(self):
        assert predicted_rank(3) == 0
        assert predicted_rank(7) == 0

    def test_abstract_labels(self):
        b1, b2 = B_RING.gens()
        assert abstract_label(1) == b1
        assert abstract_label(2) == b2
        assert abstract_label(3) == b1 + b2
        with pytest.raises(ValueError):
            abstract_label(4)

    def test_restriction_rows_differ_by_label_multiples(self):
        from flagoct.cohomology import restriction

        for e in gkm_edges():
            su, sv = sigma3_by_name(e.u), sigma3_by_name(e.v)
            for m in (1, 2, 3):
                diff = restriction(su, m) - restriction(sv, m)
                assert exact_divide(diff, abstract_label(e.k)) is not None
