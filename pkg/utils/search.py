"""
Coloring Search Engine
One backtracking engine shared by the chromatic, dominator chromatic and
majority dominator chromatic solvers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from utils.graph import Graph, iter_bits


class Rule(Enum):
    """Constraint a coloring must satisfy besides being proper."""
    PROPER = 'proper'
    DOMINATOR = 'dominator'
    MAJORITY = 'majority'


class SearchBudgetExceeded(Exception):
    """Raised inside a search once the node budget is spent."""

    def __init__(self, nodes: int):
        super().__init__(f"Search budget exhausted after {nodes} nodes")
        self.nodes = nodes


@dataclass
class SearchStats:
    """Node counter shared by every search run under one budget."""
    nodes: int = 0


def vertex_satisfied(rule: Rule, closed: int, classes: List[int]) -> bool:
    """
    Whether a vertex with closed neighborhood mask ``closed`` meets ``rule``.

    ``classes`` holds one mask per color; empty masks are ignored.
    """
    if rule == Rule.PROPER:
        return True
    if rule == Rule.DOMINATOR:
        return any(cls and not cls & ~closed for cls in classes)
    for cls in classes:
        if cls and 2 * (cls & closed).bit_count() >= cls.bit_count():
            return True
    return False


def vertex_order(g: Graph) -> List[int]:
    """
    Static branching order.

    Starts from a maximum-degree vertex, then repeatedly takes the vertex with the
    most already-ordered neighbors (ties: higher degree, then lower index). This
    keeps closed neighborhoods completing early so domination checks fire high in
    the tree.
    """
    if g.n == 0:
        return []
    degree = [row.bit_count() for row in g.adj]
    order = []
    placed = 0
    remaining = set(range(g.n))
    while remaining:
        best = min(
            remaining,
            key=lambda v: (-(g.adj[v] & placed).bit_count(), -degree[v], v),
        )
        order.append(best)
        placed |= 1 << best
        remaining.discard(best)
    return order


def _commit_schedule(g: Graph, order: List[int]) -> List[List[int]]:
    """commits[i] lists the vertices whose closed neighborhood is complete once order[i] is colored."""
    position = {v: i for i, v in enumerate(order)}
    commits: List[List[int]] = [[] for _ in order]
    for w in range(g.n):
        last = max(position[u] for u in iter_bits(g.closed_mask(w)))
        commits[last].append(w)
    return commits


def find_coloring(
    g: Graph,
    k: int,
    rule: Rule,
    budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> Optional[List[int]]:
    """
    Search for a coloring with at most ``k`` colors satisfying ``rule``.

    Colors are 1-based and introduced in order, so a returned coloring always uses
    exactly 1..max(colors).

    Args:
        g: Graph to color
        k: Maximum number of colors
        rule: Extra constraint on top of properness
        budget: Maximum total nodes for ``stats`` (None for unlimited)
        stats: Shared node counter

    Returns:
        Color list indexed by vertex, or None if no such coloring exists

    Raises:
        SearchBudgetExceeded: if the budget runs out before the answer is known
    """
    if stats is None:
        stats = SearchStats()
    if g.n == 0:
        return []
    if k < 1:
        return None

    order = vertex_order(g)
    commits = _commit_schedule(g, order)
    closed = [g.closed_mask(v) for v in range(g.n)]
    color = [0] * g.n
    classes = [0] * (k + 1)
    committed = 0
    n = g.n

    def backtrack(i: int, used: int) -> bool:
        nonlocal committed
        if i == n:
            return all(vertex_satisfied(rule, closed[w], classes) for w in range(n))

        v = order[i]
        bit = 1 << v
        blocked = 0
        for u in iter_bits(g.adj[v]):
            blocked |= 1 << color[u]

        for c in range(1, min(used + 1, k) + 1):
            if blocked >> c & 1:
                continue
            stats.nodes += 1
            if budget is not None and stats.nodes > budget:
                raise SearchBudgetExceeded(stats.nodes)

            before = classes[c]
            classes[c] = before | bit
            color[v] = c

            ok = True
            if rule != Rule.PROPER:
                # Growing class c can only hurt committed vertices that counted on it.
                for w in iter_bits(committed):
                    if closed[w] & before and not vertex_satisfied(rule, closed[w], classes):
                        ok = False
                        break
                if ok:
                    for w in commits[i]:
                        if not vertex_satisfied(rule, closed[w], classes):
                            ok = False
                            break

            if ok:
                saved = committed
                for w in commits[i]:
                    committed |= 1 << w
                if backtrack(i + 1, max(used, c)):
                    return True
                committed = saved

            classes[c] = before
            color[v] = 0
        return False

    if backtrack(0, 0):
        return list(color)
    return None


def minimum_colors(
    g: Graph,
    rule: Rule,
    start: int = 1,
    budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> Tuple[int, List[int]]:
    """
    Smallest k >= start admitting a coloring under ``rule``, scanning upward.

    Every rule is satisfiable with n colors (all classes singletons), so the scan
    always terminates.
    """
    if stats is None:
        stats = SearchStats()
    for k in range(max(start, 1), g.n + 1):
        found = find_coloring(g, k, rule, budget, stats)
        if found is not None:
            return max(found), found
    raise ValueError(f"No {rule.value} coloring found for a graph of order {g.n}")


def greedy_clique(g: Graph) -> List[int]:
    """Greedy clique, a lower bound for the chromatic number."""
    best: List[int] = []
    for start in range(g.n):
        clique = [start]
        candidates = g.adj[start]
        while candidates:
            v = max(iter_bits(candidates), key=lambda u: ((g.adj[u] & candidates).bit_count(), -u))
            clique.append(v)
            candidates &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)
