"""
Tests for the family closed forms, their witness colorings and the
constructive upper-bound colorings.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from runner import full_suite
from utils.families import (
    chi_md_closed_form,
    complement_matching_outside,
    corona_lower_bound,
    corona_upper_bound,
    disjoint_union_coloring,
    path_formula_coloring,
    witness_coloring,
    witness_from_alpha_bound,
    witness_from_matching_bound,
)
from utils.graph import FamilyKind, FamilySpec, build_graph, family_graph, is_connected
from utils.harness import enumerate_graphs, random_graph
from utils.invariants import chromatic_number, independence_number
from utils.mdc import Coloring, is_mdc, mdc_number


def spec(kind, *params):
    return FamilySpec(kind, tuple(params))


def assert_formula_matches_solver(s: FamilySpec):
    formula = chi_md_closed_form(s)
    g = family_graph(s)
    assert is_mdc(g, formula.witness), f"{s}: witness invalid"
    assert formula.witness.k == formula.value, f"{s}: witness uses {formula.witness.k} colors"
    assert mdc_number(g).value == formula.value, f"{s}: solver disagrees"


def assert_witness_valid(s: FamilySpec):
    formula = chi_md_closed_form(s)
    assert is_mdc(family_graph(s), formula.witness), f"{s}: witness invalid"
    assert formula.witness.k == formula.value, f"{s}: witness uses {formula.witness.k} colors"


# ============================================================================
# CLOSED FORMS
# ============================================================================

def test_closed_form_examples():
    assert chi_md_closed_form(spec(FamilyKind.PATH, 13)).value == 4
    assert chi_md_closed_form(spec(FamilyKind.MULTISTAR, 3, 3, 3)).value == 4
    assert chi_md_closed_form(spec(FamilyKind.CORONA_CYCLE, 3)).value == 3
    assert chi_md_closed_form(spec(FamilyKind.CYCLE, 13)).value == 5
    assert chi_md_closed_form(spec(FamilyKind.EMPTY, 5)).value == 3
    assert chi_md_closed_form(spec(FamilyKind.EMPTY, 2)).value == 1


def test_path_13_witness():
    assert witness_coloring(spec(FamilyKind.PATH, 13)).colors == (1, 2, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4, 1)


def test_path_20_witness():
    coloring = witness_coloring(spec(FamilyKind.PATH, 20))
    assert coloring.k == 6
    assert is_mdc(family_graph(spec(FamilyKind.PATH, 20)), coloring)


def test_empty_5_witness():
    assert witness_coloring(spec(FamilyKind.EMPTY, 5)).colors == (1, 1, 2, 2, 3)


def test_path_formula_coloring_needs_order_13():
    with pytest.raises(ValueError):
        path_formula_coloring(12)


def test_paths_match_solver():
    for n in range(1, 14):
        assert_formula_matches_solver(spec(FamilyKind.PATH, n))


def test_cycles_match_solver():
    for n in range(3, 15):
        assert_formula_matches_solver(spec(FamilyKind.CYCLE, n))


def test_small_families_match_solver():
    specs = [spec(FamilyKind.COMPLETE, n) for n in range(1, 6)]
    specs += [spec(FamilyKind.EMPTY, n) for n in range(1, 8)]
    specs += [spec(FamilyKind.COMPLETE_BIPARTITE, m, n) for m in range(1, 4) for n in range(1, 5)]
    specs += [spec(FamilyKind.STAR, n) for n in range(2, 8)]
    specs += [spec(FamilyKind.WHEEL, n) for n in range(3, 9)]
    specs += [spec(FamilyKind.DOUBLE_STAR, a, b) for a in range(2, 5) for b in range(2, 5)]
    specs += [spec(FamilyKind.CORONA_CYCLE, n) for n in range(3, 7)]
    for s in specs:
        assert_formula_matches_solver(s)


def test_multistars_match_solver():
    specs = [spec(FamilyKind.MULTISTAR, a) for a in range(1, 4)]
    specs += [spec(FamilyKind.MULTISTAR, a, b) for a in range(1, 4) for b in range(1, 4)]
    specs += [
        spec(FamilyKind.MULTISTAR, 1, 1, 1),
        spec(FamilyKind.MULTISTAR, 3, 3, 2),
        spec(FamilyKind.MULTISTAR, 3, 3, 3),
    ]
    for s in specs:
        assert_formula_matches_solver(s)


def test_witnesses_valid_beyond_solver_range():
    for n in range(14, 61):
        assert_witness_valid(spec(FamilyKind.PATH, n))
        assert_witness_valid(spec(FamilyKind.CYCLE, n))
    for n in range(3, 31):
        assert_witness_valid(spec(FamilyKind.CORONA_CYCLE, n))
        assert_witness_valid(spec(FamilyKind.WHEEL, n))
    for a in range(2, 9):
        for b in range(2, 9):
            assert_witness_valid(spec(FamilyKind.DOUBLE_STAR, a, b))
    for counts in ((4, 4, 4, 4), (1, 5, 5, 5), (2, 2, 2, 2, 2), (5, 5, 5, 5, 5)):
        assert_witness_valid(spec(FamilyKind.MULTISTAR, *counts))


def test_path_extension_adds_a_color():
    for n in range(11, 21):
        longer = chi_md_closed_form(spec(FamilyKind.PATH, n + 6)).value
        assert longer >= chi_md_closed_form(spec(FamilyKind.PATH, n)).value + 1, n


def test_cycle_needs_at_least_as_many_colors_as_path():
    for n in range(9, 19):
        cycle = chi_md_closed_form(spec(FamilyKind.CYCLE, n)).value
        assert cycle >= chi_md_closed_form(spec(FamilyKind.PATH, n)).value, n


def test_larger_instances_match_solver():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the larger family instances")
    for n in range(14, 21):
        assert_formula_matches_solver(spec(FamilyKind.PATH, n))
    for n in range(15, 19):
        assert_formula_matches_solver(spec(FamilyKind.CYCLE, n))
    for n in (7, 8):
        assert_formula_matches_solver(spec(FamilyKind.CORONA_CYCLE, n))
    for a in range(1, 5):
        for b in range(1, 5):
            for c in range(1, 5):
                assert_formula_matches_solver(spec(FamilyKind.MULTISTAR, a, b, c))


# ============================================================================
# CONSTRUCTIVE BOUNDS
# ============================================================================

def test_alpha_bound_witness_examples():
    cases = [
        (family_graph(spec(FamilyKind.CYCLE, 4)), 2),
        (family_graph(spec(FamilyKind.CORONA_CYCLE, 6)), 4),
        (family_graph(spec(FamilyKind.COMPLETE, 4)), 4),
    ]
    for g, colors in cases:
        witness = witness_from_alpha_bound(g)
        assert is_mdc(g, witness)
        assert witness.k == colors


def test_alpha_bound_witness_needs_connected_graph():
    with pytest.raises(ValueError):
        witness_from_alpha_bound(build_graph(3, [(0, 1)]))


def test_matching_bound_witness_examples():
    k5 = family_graph(spec(FamilyKind.COMPLETE, 5))
    assert witness_from_matching_bound(k5, [0], []).k == 5

    c4 = family_graph(spec(FamilyKind.CYCLE, 4))
    witness = witness_from_matching_bound(c4, [0, 2], [])
    assert witness.k == 3 and is_mdc(c4, witness)

    p4 = family_graph(spec(FamilyKind.PATH, 4))
    independent = [0, 3]
    witness = witness_from_matching_bound(p4, independent, complement_matching_outside(p4, independent))
    assert is_mdc(p4, witness)


def test_matching_bound_witness_rejects_bad_input():
    p4 = family_graph(spec(FamilyKind.PATH, 4))
    with pytest.raises(ValueError):
        witness_from_matching_bound(p4, [0, 1], [])
    with pytest.raises(ValueError):
        witness_from_matching_bound(p4, [0], [(1, 2)])
    with pytest.raises(ValueError):
        witness_from_matching_bound(p4, [0], [(0, 2)])
    with pytest.raises(ValueError):
        witness_from_matching_bound(build_graph(1, []), [0], [])


def assert_constructive_bounds(g):
    chi = chromatic_number(g).value
    independent = independence_number(g).witness
    alpha_witness = witness_from_alpha_bound(g)
    assert is_mdc(g, alpha_witness)
    assert alpha_witness.k <= chi + -(-len(independent) // 2) - 1

    matching = complement_matching_outside(g, independent)
    bound = g.n + 1 - len(independent) - len(matching)
    witness = witness_from_matching_bound(g, independent, matching)
    assert is_mdc(g, witness)
    assert witness.k == bound
    assert mdc_number(g).value <= bound


def connected_samples(n: int, count: int):
    for p in (0.3, 0.5, 0.8):
        for seed in range(count):
            g = random_graph(n, p, seed)
            if is_connected(g):
                yield g


def test_constructive_witnesses_on_small_graphs():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            if is_connected(g):
                assert_constructive_bounds(g)


def test_constructive_witnesses_on_random_graphs():
    for n in (6, 7, 8):
        for g in connected_samples(n, 10):
            assert_constructive_bounds(g)


def test_constructive_witnesses_order_six_to_eight():
    if not full_suite():
        pytest.skip("set MDC_FULL_SUITE=1 for the order six to eight sweep")
    for g in enumerate_graphs(6):
        if is_connected(g):
            assert_constructive_bounds(g)
    for n in (7, 8):
        for g in connected_samples(n, 100):
            assert_constructive_bounds(g)


def test_corona_bounds():
    p3 = family_graph(spec(FamilyKind.PATH, 3))
    assert corona_lower_bound(p3, 2) == 3
    assert corona_upper_bound(p3, 2) == 3
    c5 = family_graph(spec(FamilyKind.CYCLE, 5))
    assert corona_lower_bound(c5, 3) == 4
    assert corona_upper_bound(c5, 3) == 5


def test_disjoint_union_coloring():
    joined = disjoint_union_coloring([Coloring((1, 2)), Coloring((1,)), Coloring((2, 1, 2))])
    assert joined.colors == (1, 2, 3, 5, 4, 5)


if __name__ == "__main__":
    from runner import run_all
    sys.exit(run_all("FAMILY FORMULA TEST SUITE", globals()))
