from __future__ import annotations

import pytest

from domicert import (
    CapabilityError,
    DomainError,
    Graph,
    ev_dominates,
    gamma_ev_tree_fast,
    generate_connected_graphs,
    generate_trees,
    is_dominating_set,
    is_ev_dominating_set,
    is_paired_dominating_set,
    perfect_matchings_within,
    solve_ev,
    solve_pr,
    spanned_vertices,
    uniqueness,
)

from .conftest import cycle_graph, path_graph, pendant_cycle, spider_222
from .oracles import min_ev_family_naive, min_pr_family_naive


class TestPredicates:
    def test_ev_dominates_path(self):
        g = path_graph(4)
        assert ev_dominates(g, (1, 2), 0)
        assert ev_dominates(g, (1, 2), 3)
        assert not ev_dominates(g, (0, 1), 3)

    def test_ev_dominates_rejects_non_edge(self):
        with pytest.raises(ValueError):
            ev_dominates(path_graph(4), (0, 2), 1)

    def test_ev_dominating_set(self):
        g = pendant_cycle()
        assert is_ev_dominating_set(g, [(0, 1), (2, 3)])
        assert not is_ev_dominating_set(g, [(0, 1)])
        assert is_ev_dominating_set(path_graph(4), [(1, 2)])

    def test_dominating_set_literal_definition(self):
        g = path_graph(4)
        # members of the set do not need neighbors inside it
        assert is_dominating_set(g, [1, 2])
        assert is_dominating_set(g, [0, 2])
        assert not is_dominating_set(g, [0])
        assert is_dominating_set(g, range(4))

    def test_paired_dominating_set(self):
        g = pendant_cycle()
        assert is_paired_dominating_set(g, [0, 1, 2, 3])
        assert not is_paired_dominating_set(g, [0, 2, 4, 6])
        assert not is_paired_dominating_set(path_graph(4), [0, 2])
        assert is_paired_dominating_set(path_graph(4), [1, 2])


class TestSolveEv:
    def test_single_edge(self):
        family = solve_ev(Graph(2, [(0, 1)]))
        assert family.gamma == 1
        assert family.sets == (((0, 1),),)

    def test_pendant_cycle_exact_family(self):
        family = solve_ev(pendant_cycle())
        assert family.gamma == 2
        assert family.sets == (((0, 1), (2, 3)), ((0, 3), (1, 2)))

    def test_spider(self):
        family = solve_ev(spider_222())
        assert family.gamma == 3
        assert family.contains([(0, 1), (0, 3), (5, 6)])

    def test_rejects_isolated_vertex(self):
        with pytest.raises(DomainError):
            solve_ev(Graph(3, [(0, 1)]))

    def test_rejects_tiny(self):
        with pytest.raises(DomainError):
            solve_ev(Graph(1, ()))

    def test_budget_exhaustion(self):
        with pytest.raises(CapabilityError):
            solve_ev(pendant_cycle(), budget=3)

    def test_families_sorted_and_duplicate_free(self):
        family = solve_ev(spider_222())
        assert list(family.sets) == sorted(set(family.sets))
        for members in family.sets:
            assert list(members) == sorted(members)

    def test_matches_naive_on_trees(self):
        for n in range(2, 8):
            for g in generate_trees(n):
                gamma, sets = min_ev_family_naive(g)
                family = solve_ev(g)
                assert family.gamma == gamma
                assert list(family.sets) == sets

    def test_matches_naive_on_connected(self):
        for n in range(2, 6):
            for g in generate_connected_graphs(n):
                gamma, sets = min_ev_family_naive(g)
                family = solve_ev(g)
                assert family.gamma == gamma
                assert list(family.sets) == sets


class TestSolvePr:
    def test_single_edge(self):
        family = solve_pr(Graph(2, [(0, 1)]))
        assert family.gamma == 2
        assert family.sets == ((0, 1),)

    def test_pendant_cycle_unique(self):
        family = solve_pr(pendant_cycle())
        assert family.gamma == 4
        assert family.sets == ((0, 1, 2, 3),)

    def test_spider(self):
        family = solve_pr(spider_222())
        assert family.gamma == 6

    def test_sets_induce_matchable_subgraphs(self):
        for members in solve_pr(spider_222()).sets:
            assert is_paired_dominating_set(spider_222(), members)

    def test_rejects_isolated_vertex(self):
        with pytest.raises(DomainError):
            solve_pr(Graph(3, [(0, 1)]))

    def test_matches_naive_on_trees(self):
        for n in range(2, 8):
            for g in generate_trees(n):
                gamma, sets = min_pr_family_naive(g)
                family = solve_pr(g)
                assert family.gamma == gamma
                assert list(family.sets) == sets

    def test_matches_naive_on_connected(self):
        for n in range(2, 6):
            for g in generate_connected_graphs(n):
                gamma, sets = min_pr_family_naive(g)
                family = solve_pr(g)
                assert family.gamma == gamma
                assert list(family.sets) == sets


class TestStructuralInvariants:
    def test_double_ev_equals_pr_small(self):
        graphs = [g for n in range(2, 8) for g in generate_trees(n)]
        graphs += [g for n in range(2, 6) for g in generate_connected_graphs(n)]
        for g in graphs:
            assert 2 * solve_ev(g).gamma == solve_pr(g).gamma

    def test_minimality_no_feasible_subset(self):
        for g in (spider_222(), pendant_cycle(), path_graph(7)):
            family = solve_ev(g)
            for members in family.sets:
                for drop in range(len(members)):
                    smaller = members[:drop] + members[drop + 1:]
                    assert not is_ev_dominating_set(g, smaller)

    def test_paired_matchings_are_ev_sets(self):
        # pairing up a paired-dominating set yields an ev-dominating set
        for g in (spider_222(), pendant_cycle(), cycle_graph(6)):
            for members in solve_pr(g).sets:
                for matching in perfect_matchings_within(g, members):
                    assert len(matching) == len(members) // 2
                    assert is_ev_dominating_set(g, matching)


class TestSpanAndUniqueness:
    def test_spanned_vertices(self):
        assert spanned_vertices([(0, 1), (2, 3)]) == frozenset({0, 1, 2, 3})
        assert spanned_vertices([]) == frozenset()

    def test_path4_ev_unique(self):
        verdict = uniqueness(path_graph(4), "ev")
        assert verdict.unique and verdict.witness_count == 1
        assert verdict.common_span == frozenset({1, 2})

    def test_path3_ev_two_witnesses(self):
        verdict = uniqueness(path_graph(3), "ev")
        assert not verdict.unique
        assert verdict.witness_count == 2
        assert verdict.common_span is None

    def test_pendant_cycle_ev_common_span(self):
        verdict = uniqueness(pendant_cycle(), "ev")
        assert not verdict.unique
        assert verdict.witness_count == 2
        assert verdict.common_span == frozenset({0, 1, 2, 3})

    def test_pendant_cycle_paired_unique(self):
        verdict = uniqueness(pendant_cycle(), "paired")
        assert verdict.unique and verdict.witness_count == 1
        assert verdict.common_span == frozenset({0, 1, 2, 3})

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            uniqueness(path_graph(4), "vertex")


class TestTreeFastPath:
    def test_known_values(self):
        assert gamma_ev_tree_fast(path_graph(4)) == 1
        assert gamma_ev_tree_fast(path_graph(7)) == 2
        assert gamma_ev_tree_fast(spider_222()) == 3

    def test_rejects_non_tree(self):
        with pytest.raises(DomainError):
            gamma_ev_tree_fast(cycle_graph(4))

    def test_rejects_tiny(self):
        with pytest.raises(DomainError):
            gamma_ev_tree_fast(Graph(1, ()))

    def test_agrees_with_solver_through_ten(self):
        for n in range(2, 11):
            for g in generate_trees(n):
                assert gamma_ev_tree_fast(g) == solve_ev(g).gamma
