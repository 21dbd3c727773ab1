"""
Tests for the theorem harness: populations, bound checks, characterizations,
corona checks and exploration.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from runner import full_suite
from utils.graph import (
    FamilyKind,
    FamilySpec,
    build_graph,
    corona_product,
    disjoint_union,
    encode_graph,
    family_graph,
    strong_product,
)
from utils.harness import (
    SUITES,
    GraphPopulation,
    PopulationMode,
    SuiteOptions,
    check_alpha_bound,
    check_bipartite_corona,
    check_bound_chain,
    check_corona_sandwich,
    check_degree_bound,
    check_disconnected_bounds,
    check_family_table,
    check_large_value_characterizations,
    check_matching_bound,
    check_small_value_characterizations,
    complement_is_small_star,
    default_bipartite_bases,
    default_nonbipartite_bases,
    enumerate_graphs,
    explore_alpha_bound_sharpness,
    explore_corona_values,
    explore_equality_chi_d,
    is_trivial_one,
    random_graph,
    run_suite,
    two_coloring_condition,
)


K1 = build_graph(1, [])


def fam(kind, *params):
    return family_graph(FamilySpec(kind, tuple(params)))


def explicit(*graphs, budget=None):
    return GraphPopulation(PopulationMode.EXPLICIT, graphs=tuple(graphs), budget=budget)


def exhaustive(max_n=5, **filters):
    return GraphPopulation(PopulationMode.EXHAUSTIVE, max_n=max_n, **filters)


def assert_clean(report):
    assert report.passed, [(f.graph, f.observed) for f in report.failures]
    assert not report.skipped
    assert report.tested > 0


# ============================================================================
# POPULATIONS
# ============================================================================

def test_enumerate_graphs_counts():
    assert sum(1 for _ in enumerate_graphs(1)) == 1
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    assert sum(1 for _ in enumerate_graphs(4)) == 64
    with pytest.raises(ValueError):
        next(enumerate_graphs(7))


def test_random_graph_examples():
    assert random_graph(5, 0.0, 1) == fam(FamilyKind.EMPTY, 5)
    assert random_graph(5, 1.0, 1) == fam(FamilyKind.COMPLETE, 5)
    assert random_graph(8, 0.5, 42) == random_graph(8, 0.5, 42)
    with pytest.raises(ValueError):
        random_graph(5, 1.5, 1)


def test_population_filters():
    connected = list(exhaustive(max_n=4, connected_only=True).members())
    assert len(connected) == 1 + 1 + 4 + 38
    split = list(exhaustive(max_n=3, min_components=2).members())
    # co-K2, and on three vertices the empty graph plus three single edges
    assert len(split) == 1 + 4


def test_random_population_is_reproducible():
    pop = GraphPopulation(PopulationMode.RANDOM, n_values=(6,), p_values=(0.5,), count=5, seed=7)
    assert list(pop.members()) == list(pop.members())
    assert 'seed=7' in pop.describe()


# ============================================================================
# BOUNDS
# ============================================================================

def test_bound_chain_exhaustive():
    assert_clean(check_bound_chain(exhaustive()))


def test_bound_chain_examples():
    report = check_bound_chain(explicit(fam(FamilyKind.COMPLETE, 6), fam(FamilyKind.EMPTY, 4)))
    assert_clean(report)
    assert report.tested == 2


def test_alpha_bound_exhaustive():
    assert_clean(check_alpha_bound(exhaustive(connected_only=True)))


def test_alpha_bound_sharp_examples():
    report = check_alpha_bound(explicit(fam(FamilyKind.CORONA_CYCLE, 4), fam(FamilyKind.COMPLETE, 5)))
    assert_clean(report)
    assert encode_graph(fam(FamilyKind.CORONA_CYCLE, 4)) in report.sharp


def test_matching_bound_exhaustive():
    assert_clean(check_matching_bound(exhaustive(connected_only=True, min_n=2)))


def test_matching_bound_sharp_for_complete_graphs():
    graphs = [fam(FamilyKind.COMPLETE, n) for n in range(2, 6)]
    report = check_matching_bound(explicit(*graphs))
    assert_clean(report)
    assert report.sharp == [encode_graph(g) for g in graphs]


def test_degree_bound_exhaustive():
    assert_clean(check_degree_bound(exhaustive()))


def test_disconnected_bounds_exhaustive():
    assert_clean(check_disconnected_bounds(exhaustive(min_n=2, min_components=2)))


def test_disconnected_bounds_tight_examples():
    k4, k2 = fam(FamilyKind.COMPLETE, 4), fam(FamilyKind.COMPLETE, 2)
    p4p2 = strong_product(fam(FamilyKind.PATH, 4), fam(FamilyKind.PATH, 2))
    report = check_disconnected_bounds(explicit(
        disjoint_union(k4, k2, k2),
        disjoint_union(p4p2, p4p2),
        fam(FamilyKind.EMPTY, 4),
    ))
    assert_clean(report)
    by_graph = {record['graph']: record for record in report.observed}

    union = by_graph[encode_graph(disjoint_union(k4, k2, k2))]
    assert union['chi_md'] == union['max'] == 4

    # the sum of component values is not attained here
    products = by_graph[encode_graph(disjoint_union(p4p2, p4p2))]
    assert products['components'] == [4, 4]
    assert products['chi_md'] == 5 < products['sum']

    empty = by_graph[encode_graph(fam(FamilyKind.EMPTY, 4))]
    assert (empty['max'], empty['chi_md'], empty['sum']) == (1, 2, 4)


def test_connected_graphs_are_not_disconnected_members():
    report = check_disconnected_bounds(explicit(fam(FamilyKind.PATH, 4)))
    assert report.tested == 0 and report.passed


def test_budget_limited_members_are_skipped():
    report = check_bound_chain(explicit(fam(FamilyKind.CYCLE, 14), budget=10))
    assert report.tested == 0
    assert report.skipped == [encode_graph(fam(FamilyKind.CYCLE, 14))]
    assert report.passed


# ============================================================================
# CHARACTERIZATIONS
# ============================================================================

def test_small_value_predicates():
    assert is_trivial_one(K1)
    assert is_trivial_one(fam(FamilyKind.EMPTY, 2))
    assert not is_trivial_one(fam(FamilyKind.COMPLETE, 2))
    assert two_coloring_condition(fam(FamilyKind.COMPLETE_BIPARTITE, 2, 7))
    assert not two_coloring_condition(fam(FamilyKind.CYCLE, 5))
    assert not two_coloring_condition(fam(FamilyKind.EMPTY, 5))


def test_small_values_exhaustive():
    assert_clean(check_small_value_characterizations(exhaustive()))


def test_large_value_predicates():
    k5 = fam(FamilyKind.COMPLETE, 5)
    minus_one = build_graph(5, [e for e in k5.edges() if e != (0, 1)])
    minus_two = build_graph(5, [e for e in k5.edges() if e not in ((0, 1), (2, 3))])
    assert complement_is_small_star(minus_one)
    assert not complement_is_small_star(minus_two)
    assert not complement_is_small_star(k5)
    assert not complement_is_small_star(fam(FamilyKind.STAR, 6))


def test_large_values_exhaustive():
    assert_clean(check_large_value_characterizations(exhaustive()))


# ============================================================================
# CORONAS AND FAMILIES
# ============================================================================

def test_bipartite_corona_examples():
    report = check_bipartite_corona([fam(FamilyKind.PATH, 3), fam(FamilyKind.CYCLE, 4), fam(FamilyKind.PATH, 5)])
    assert_clean(report)
    assert report.tested == 3


def test_bipartite_corona_rejects_bad_bases():
    for g in (fam(FamilyKind.CYCLE, 5), build_graph(4, [(0, 1), (2, 3)]), K1):
        with pytest.raises(ValueError):
            check_bipartite_corona([g])


def test_corona_sandwich_defaults():
    assert_clean(check_corona_sandwich(default_nonbipartite_bases()))


def test_family_table_report():
    specs = [FamilySpec.parse(text) for text in ('path:13', 'cycle:11', 'wheel:5', 'doublestar:3,3', 'multistar:2,2')]
    report = check_family_table(specs)
    assert_clean(report)
    assert report.observed[0] == {'family': 'path:13', 'closed_form': 4, 'solver': 4}


# ============================================================================
# EXPLORATION
# ============================================================================

def test_explore_equality_chi_d():
    found = explore_equality_chi_d(exhaustive(max_n=4))
    assert found
    for n in range(1, 5):
        assert encode_graph(fam(FamilyKind.COMPLETE, n)) in found
    assert encode_graph(fam(FamilyKind.EMPTY, 3)) not in found


def test_explore_alpha_bound_sharpness():
    found = explore_alpha_bound_sharpness(explicit(fam(FamilyKind.CORONA_CYCLE, 6), fam(FamilyKind.PATH, 2)))
    assert encode_graph(fam(FamilyKind.CORONA_CYCLE, 6)) in found


def test_explore_corona_values():
    rows = explore_corona_values([fam(FamilyKind.CYCLE, 3), fam(FamilyKind.PATH, 3)])
    assert [(row['n'], row['chi'], row['corona_chi_md']) for row in rows] == [(3, 3, 3), (3, 2, 3)]


# ============================================================================
# SUITES
# ============================================================================

def test_suite_registry():
    assert set(SUITES) == {
        'bound_chain', 'alpha_bound', 'matching_bound', 'degree_bound', 'small_values',
        'large_values', 'disconnected', 'bipartite_corona', 'corona_sandwich', 'random_bounds',
    }
    with pytest.raises(ValueError):
        run_suite('no_such_suite')


def test_run_suite_with_workers():
    [report] = run_suite('degree_bound', SuiteOptions(max_n=4, workers=2))
    assert_clean(report)


def test_default_bases_are_valid():
    assert len(default_bipartite_bases()) == 11
    report = check_bipartite_corona(default_bipartite_bases())
    assert_clean(report)


def test_random_bounds_suite():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the random population suite")
    for report in run_suite('random_bounds', SuiteOptions(samples=10, random_orders=(7, 8, 9))):
        assert report.passed


def test_random_bounds_suite_at_default_size():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the random population suite")
    opts = SuiteOptions()
    assert opts.samples == 50 and opts.random_orders == (7, 8, 9, 10, 11, 12)
    reports = run_suite('random_bounds', opts)
    for report in reports:
        assert report.passed, [(f.graph, f.observed) for f in report.failures]
        assert not report.skipped
    assert sum(report.tested for report in reports) > 0


def test_bound_chain_order_six():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the order six sweep")
    assert_clean(check_bound_chain(exhaustive(max_n=6)))


def test_characterizations_order_six():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the order six sweep")
    assert_clean(check_small_value_characterizations(exhaustive(max_n=6)))
    assert_clean(check_large_value_characterizations(exhaustive(max_n=6)))


def test_corona_of_k1_products_match_families():
    for n in range(3, 7):
        assert corona_product(fam(FamilyKind.CYCLE, n), K1) == fam(FamilyKind.CORONA_CYCLE, n)


if __name__ == "__main__":
    from runner import run_all
    sys.exit(run_all("THEOREM HARNESS TEST SUITE", globals()))
