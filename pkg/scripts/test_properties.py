"""
Property-based tests over small random graphs.
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

try:
    from hypothesis import given, settings
    from hypothesis import strategies as st
except ModuleNotFoundError:  # pragma: no cover
    pytest.skip("hypothesis not installed", allow_module_level=True)

from utils.families import disjoint_union_coloring
from utils.graph import Graph, build_graph, complement, components, corona_product, induced_subgraph
from utils.invariants import (
    chromatic_number,
    domination_number,
    dominator_chromatic_number,
    independence_number,
    is_dominating_set,
    is_independent_set,
    is_matching,
    matching_number,
)
from utils.mdc import Coloring, brute_force_mdc, is_mdc, mdc_number


@st.composite
def small_graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, on in zip(pairs, keep) if on])


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_solver_witness_is_valid(g: Graph) -> None:
    result = mdc_number(g)
    assert result.solved
    assert is_mdc(g, result.witness)
    assert result.witness.k == result.value


@settings(max_examples=25, deadline=None)
@given(small_graphs(max_n=6))
def test_solver_matches_brute_force(g: Graph) -> None:
    assert mdc_number(g).value == brute_force_mdc(g).value


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_bound_chain(g: Graph) -> None:
    chi = chromatic_number(g).value
    chi_md = mdc_number(g).value
    chi_d = dominator_chromatic_number(g).value
    gamma = domination_number(g).value
    assert chi <= chi_md <= chi_d <= g.n
    assert chi_md <= chi + gamma


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_classic_witnesses(g: Graph) -> None:
    assert is_dominating_set(g, domination_number(g).witness)
    assert is_independent_set(g, independence_number(g).witness)
    matching = matching_number(g)
    assert is_matching(g, matching.witness)
    assert 2 * matching.value <= g.n


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_n=8))
def test_component_colorings_combine(g: Graph) -> None:
    comps = components(g)
    parts = [mdc_number(induced_subgraph(g, comp)[0]).witness for comp in comps]
    joined = disjoint_union_coloring(parts)
    # joined lists the components one after another, each in ascending vertex order
    order = [v for comp in comps for v in sorted(comp)]
    colors = [0] * g.n
    for position, v in enumerate(order):
        colors[v] = joined.colors[position]
    combined = Coloring(tuple(colors))
    assert is_mdc(g, combined)
    assert combined.k == sum(part.k for part in parts)


@settings(max_examples=50, deadline=None)
@given(small_graphs(min_n=0))
def test_complement_involution(g: Graph) -> None:
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


@settings(max_examples=30, deadline=None)
@given(small_graphs(max_n=5), small_graphs(max_n=3))
def test_corona_counts(g: Graph, h: Graph) -> None:
    corona = corona_product(g, h)
    assert corona.n == g.n * (1 + h.n)
    assert corona.edge_count == g.edge_count + g.n * (h.edge_count + h.n)


if __name__ == "__main__":
    from runner import run_all
    sys.exit(run_all("PROPERTY TEST SUITE", globals()))
