"""
Classic Invariants
Exact chromatic, domination, independence, matching and dominator chromatic
numbers, plus the independent checkers used to certify their witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from utils.graph import Graph, iter_bits, mask_of
from utils.search import (
    Rule,
    SearchBudgetExceeded,
    SearchStats,
    greedy_clique,
    minimum_colors,
)


SOLVED = 'SOLVED'
UNDECIDED = 'UNDECIDED'


@dataclass
class InvariantResult:
    """
    Exact value of an invariant together with its certificate.

    Attributes:
        value: The invariant, or None when the node budget ran out
        witness: Coloring, vertex set or edge set certifying ``value``
        nodes_explored: Search nodes spent
        status: 'SOLVED' or 'UNDECIDED'
    """
    value: Optional[int]
    witness: Any = None
    nodes_explored: int = 0
    status: str = SOLVED

    @property
    def solved(self) -> bool:
        return self.status == SOLVED


def _require_vertices(g: Graph, what: str):
    if g.n == 0:
        raise ValueError(f"{what} is undefined for the graph with no vertices")


def max_degree(g: Graph) -> int:
    _require_vertices(g, "Maximum degree")
    return max(row.bit_count() for row in g.adj)


# ============================================================================
# COLORINGS
# ============================================================================

def chromatic_number(
    g: Graph,
    budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> InvariantResult:
    """Iterative deepening from a greedy clique bound."""
    _require_vertices(g, "Chromatic number")
    stats = stats or SearchStats()
    try:
        value, colors = minimum_colors(g, Rule.PROPER, len(greedy_clique(g)), budget, stats)
    except SearchBudgetExceeded:
        return InvariantResult(None, None, stats.nodes, UNDECIDED)
    return InvariantResult(value, tuple(colors), stats.nodes)


def dominator_chromatic_number(
    g: Graph,
    budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> InvariantResult:
    """
    χ_d with closed-neighborhood domination: v dominates class V_i iff V_i ⊆ N[v].

    The scan starts at χ(g), which lower-bounds χ_d.
    """
    _require_vertices(g, "Dominator chromatic number")
    stats = stats or SearchStats()
    chi = chromatic_number(g, budget, stats)
    if not chi.solved:
        return InvariantResult(None, None, stats.nodes, UNDECIDED)
    try:
        value, colors = minimum_colors(g, Rule.DOMINATOR, chi.value, budget, stats)
    except SearchBudgetExceeded:
        return InvariantResult(None, None, stats.nodes, UNDECIDED)
    return InvariantResult(value, tuple(colors), stats.nodes)


# ============================================================================
# DOMINATION
# ============================================================================

def _greedy_dominating_set(g: Graph) -> List[int]:
    full = g.vertex_mask
    closed = [g.closed_mask(v) for v in range(g.n)]
    dominated = 0
    chosen = []
    while dominated != full:
        v = max(range(g.n), key=lambda u: ((closed[u] & ~dominated).bit_count(), -u))
        chosen.append(v)
        dominated |= closed[v]
    return chosen


def domination_number(g: Graph) -> InvariantResult:
    """
    Branch and bound: branch on who dominates the lowest undominated vertex.

    Bound: each added vertex covers at most Δ+1 undominated vertices.
    """
    _require_vertices(g, "Domination number")
    full = g.vertex_mask
    closed = [g.closed_mask(v) for v in range(g.n)]
    cover = max_degree(g) + 1
    best = sorted(_greedy_dominating_set(g))
    nodes = 0

    def search(chosen: List[int], dominated: int):
        nonlocal best, nodes
        nodes += 1
        if dominated == full:
            if len(chosen) < len(best):
                best = sorted(chosen)
            return
        missing = (full & ~dominated).bit_count()
        if len(chosen) + -(-missing // cover) >= len(best):
            return
        undominated = full & ~dominated
        u = (undominated & -undominated).bit_length() - 1
        for w in iter_bits(closed[u]):
            chosen.append(w)
            search(chosen, dominated | closed[w])
            chosen.pop()

    search([], 0)
    return InvariantResult(len(best), frozenset(best), nodes)


# ============================================================================
# INDEPENDENCE
# ============================================================================

def _greedy_independent_set(g: Graph) -> List[int]:
    candidates = g.vertex_mask
    chosen = []
    while candidates:
        v = min(iter_bits(candidates), key=lambda u: ((g.adj[u] & candidates).bit_count(), u))
        chosen.append(v)
        candidates &= ~g.closed_mask(v)
    return chosen


def independence_number(g: Graph) -> InvariantResult:
    """
    Include-first branch and bound over ascending vertices.

    The first maximum set reached is the lexicographically least one, and only
    strict improvements replace it, so the witness is deterministic.
    """
    _require_vertices(g, "Independence number")
    closed = [g.closed_mask(v) for v in range(g.n)]
    best_size = len(_greedy_independent_set(g)) - 1
    best: Tuple[int, ...] = ()
    nodes = 0

    def search(chosen: List[int], candidates: int):
        nonlocal best, best_size, nodes
        nodes += 1
        if not candidates:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best = tuple(chosen)
            return
        if len(chosen) + candidates.bit_count() <= best_size:
            return
        v = (candidates & -candidates).bit_length() - 1
        chosen.append(v)
        search(chosen, candidates & ~closed[v])
        chosen.pop()
        search(chosen, candidates & ~(1 << v))

    search([], g.vertex_mask)
    return InvariantResult(best_size, frozenset(best), nodes)


# ============================================================================
# MATCHING
# ============================================================================

def matching_number(g: Graph) -> InvariantResult:
    """Maximum cardinality matching via networkx's blossom implementation."""
    matching = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    edges = frozenset((min(a, b), max(a, b)) for a, b in matching)
    return InvariantResult(len(edges), edges, 0)


# ============================================================================
# CHECKERS
# ============================================================================

def is_proper_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if len(colors) != g.n:
        return False
    return all(colors[u] != colors[v] for u, v in g.edges())


def is_dominating_set(g: Graph, vertices: Iterable[int]) -> bool:
    dominated = 0
    for v in vertices:
        dominated |= g.closed_mask(v)
    return dominated == g.vertex_mask


def is_independent_set(g: Graph, vertices: Iterable[int]) -> bool:
    chosen = mask_of(vertices)
    return all(not g.adj[v] & chosen for v in iter_bits(chosen))


def is_matching(g: Graph, edges: Iterable[Tuple[int, int]]) -> bool:
    seen = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True


def is_dominator_coloring(g: Graph, colors: Sequence[int]) -> bool:
    if not is_proper_coloring(g, colors):
        return False
    classes = {}
    for v, c in enumerate(colors):
        classes[c] = classes.get(c, 0) | (1 << v)
    return all(
        any(not cls & ~g.closed_mask(v) for cls in classes.values())
        for v in range(g.n)
    )
