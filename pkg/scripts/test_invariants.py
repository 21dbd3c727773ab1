"""
Tests for the classic invariant solvers and their cross-checking oracles.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from runner import full_suite
from utils.graph import FamilyKind, FamilySpec, build_graph, complement, family_graph
from utils.harness import enumerate_graphs, random_graph
from utils.invariants import (
    UNDECIDED,
    chromatic_number,
    domination_number,
    dominator_chromatic_number,
    independence_number,
    is_dominating_set,
    is_dominator_coloring,
    is_independent_set,
    is_matching,
    is_proper_coloring,
    matching_number,
    max_degree,
)
from utils.oracles import (
    oracle_chromatic_number,
    oracle_dominator_chromatic_number,
    oracle_domination_number,
    oracle_independence_number,
    oracle_matching_number,
    set_partitions,
)
from utils.search import Rule, SearchStats, find_coloring, vertex_order


def fam(kind, *params):
    return family_graph(FamilySpec(kind, tuple(params)))


def test_chromatic_number_examples():
    assert chromatic_number(fam(FamilyKind.COMPLETE_BIPARTITE, 3, 3)).value == 2
    assert chromatic_number(fam(FamilyKind.CYCLE, 5)).value == 3
    assert chromatic_number(fam(FamilyKind.WHEEL, 5)).value == 4
    assert chromatic_number(fam(FamilyKind.EMPTY, 4)).value == 1


def test_chromatic_witness_is_proper():
    g = fam(FamilyKind.WHEEL, 7)
    result = chromatic_number(g)
    assert is_proper_coloring(g, result.witness)
    assert max(result.witness) == result.value


def test_domination_number_examples():
    assert domination_number(fam(FamilyKind.COMPLETE, 6)).value == 1
    result = domination_number(fam(FamilyKind.CYCLE, 6))
    assert result.value == 2
    assert is_dominating_set(fam(FamilyKind.CYCLE, 6), result.witness)
    assert domination_number(fam(FamilyKind.EMPTY, 4)).value == 4


def test_independence_number_examples():
    result = independence_number(fam(FamilyKind.CYCLE, 5))
    assert result.value == 2
    assert result.witness == frozenset({0, 2})
    assert independence_number(fam(FamilyKind.COMPLETE_BIPARTITE, 3, 5)).value == 5
    for n in (3, 4, 5, 6):
        assert independence_number(fam(FamilyKind.CORONA_CYCLE, n)).value == n


def test_matching_number_examples():
    assert matching_number(fam(FamilyKind.PATH, 5)).value == 2
    result = matching_number(fam(FamilyKind.COMPLETE, 4))
    assert result.value == 2
    assert is_matching(fam(FamilyKind.COMPLETE, 4), result.witness)
    assert matching_number(fam(FamilyKind.EMPTY, 3)).value == 0


def test_dominator_chromatic_number_examples():
    for n in (1, 3, 5):
        assert dominator_chromatic_number(fam(FamilyKind.COMPLETE, n)).value == n
    assert dominator_chromatic_number(fam(FamilyKind.STAR, 5)).value == 2
    g = fam(FamilyKind.PATH, 7)
    result = dominator_chromatic_number(g)
    assert result.value == oracle_dominator_chromatic_number(g)
    assert is_dominator_coloring(g, result.witness)


def test_max_degree_examples():
    assert max_degree(fam(FamilyKind.WHEEL, 6)) == 6
    assert max_degree(fam(FamilyKind.CYCLE, 9)) == 2
    assert max_degree(fam(FamilyKind.EMPTY, 3)) == 0
    with pytest.raises(ValueError):
        max_degree(build_graph(0, []))


def test_invariants_reject_empty_graph():
    empty = build_graph(0, [])
    for solver in (chromatic_number, domination_number, independence_number, dominator_chromatic_number):
        with pytest.raises(ValueError):
            solver(empty)


def test_budget_exhaustion_is_undecided():
    result = chromatic_number(fam(FamilyKind.COMPLETE, 5), budget=1)
    assert result.status == UNDECIDED
    assert result.value is None
    assert not result.solved


def test_shared_stats_accumulate():
    stats = SearchStats()
    g = fam(FamilyKind.CYCLE, 7)
    find_coloring(g, 3, Rule.PROPER, stats=stats)
    first = stats.nodes
    find_coloring(g, 3, Rule.PROPER, stats=stats)
    assert stats.nodes == 2 * first > 0


def test_vertex_order_is_a_permutation():
    for g in (fam(FamilyKind.WHEEL, 5), fam(FamilyKind.DOUBLE_STAR, 3, 4), build_graph(4, [])):
        order = vertex_order(g)
        assert sorted(order) == list(range(g.n))
    # starts from the hub
    assert vertex_order(fam(FamilyKind.WHEEL, 5))[0] == 5


def test_set_partitions_counts():
    # Bell numbers and Stirling numbers of the second kind
    assert [sum(1 for _ in set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert sum(1 for _ in set_partitions(5, 2)) == 15


def test_checkers_reject_bad_witnesses():
    p3 = fam(FamilyKind.PATH, 3)
    assert not is_proper_coloring(p3, [1, 1, 2])
    assert not is_proper_coloring(p3, [1, 2])
    assert not is_dominating_set(p3, [0])
    assert not is_independent_set(p3, [0, 1])
    assert not is_matching(p3, [(0, 1), (1, 2)])
    assert not is_matching(p3, [(0, 2)])
    assert not is_dominator_coloring(fam(FamilyKind.EMPTY, 3), [1, 1, 2])


def _assert_matches_oracles(g):
    assert chromatic_number(g).value == oracle_chromatic_number(g)
    assert dominator_chromatic_number(g).value == oracle_dominator_chromatic_number(g)
    assert domination_number(g).value == oracle_domination_number(g)
    assert independence_number(g).value == oracle_independence_number(g)
    assert matching_number(g).value == oracle_matching_number(g)


def test_solvers_match_oracles_exhaustive():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            _assert_matches_oracles(g)


def test_complement_of_independence_is_clique():
    # α(G) is the clique number of the complement, so it bounds χ of the complement
    for g in enumerate_graphs(4):
        alpha = independence_number(g).value
        assert chromatic_number(complement(g)).value >= alpha


def test_solvers_match_oracles_order_six_and_seven():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the order six and seven sweep")
    for g in enumerate_graphs(6):
        _assert_matches_oracles(g)
    for i in range(200):
        _assert_matches_oracles(random_graph(7, 0.5, i))


if __name__ == "__main__":
    from runner import run_all
    sys.exit(run_all("CLASSIC INVARIANTS TEST SUITE", globals()))
