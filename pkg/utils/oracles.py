"""
Exhaustive oracles for small graphs.

Slow on purpose: plain enumeration with no pruning, used only to cross-check the
solvers in tests.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterator, List, Optional, Sequence

from utils.graph import Graph
from utils.invariants import is_dominating_set, is_dominator_coloring, is_independent_set, is_proper_coloring


ORACLE_MAX_ORDER = 7


def _check_order(g: Graph, limit: int = ORACLE_MAX_ORDER):
    if g.n == 0:
        raise ValueError("Oracles need at least one vertex")
    if g.n > limit:
        raise ValueError(f"Oracle limited to order {limit}, got {g.n}")


def set_partitions(n: int, blocks: Optional[int] = None) -> Iterator[List[int]]:
    """
    Restricted growth strings of length n, i.e. set partitions as 1-based labels.

    With ``blocks`` given, only partitions into exactly that many classes are produced.
    """
    if n == 0:
        if not blocks:
            yield []
        return
    labels = [0] * n

    def grow(i: int, used: int):
        if blocks is not None and used + (n - i) < blocks:
            return
        if i == n:
            if blocks is None or used == blocks:
                yield list(labels)
            return
        top = used + 1 if blocks is None else min(used + 1, blocks)
        for c in range(1, top + 1):
            labels[i] = c
            yield from grow(i + 1, max(used, c))

    yield from grow(0, 0)


def smallest_partition(g: Graph, accept: Callable[[Sequence[int]], bool]) -> int:
    """Fewest classes of a vertex partition satisfying ``accept``."""
    for k in range(1, g.n + 1):
        for labels in set_partitions(g.n, k):
            if accept(labels):
                return k
    raise ValueError("No partition satisfies the predicate")


def oracle_chromatic_number(g: Graph) -> int:
    _check_order(g)
    return smallest_partition(g, lambda labels: is_proper_coloring(g, labels))


def oracle_dominator_chromatic_number(g: Graph) -> int:
    _check_order(g)
    return smallest_partition(g, lambda labels: is_dominator_coloring(g, labels))


def oracle_domination_number(g: Graph) -> int:
    _check_order(g)
    for size in range(1, g.n + 1):
        if any(is_dominating_set(g, s) for s in combinations(range(g.n), size)):
            return size
    return g.n


def oracle_independence_number(g: Graph) -> int:
    _check_order(g)
    for size in range(g.n, 0, -1):
        if any(is_independent_set(g, s) for s in combinations(range(g.n), size)):
            return size
    return 0


def oracle_matching_number(g: Graph) -> int:
    _check_order(g)
    edges = g.edges()

    def best(start: int, used: int) -> int:
        top = 0
        for i in range(start, len(edges)):
            u, v = edges[i]
            if not used >> u & 1 and not used >> v & 1:
                top = max(top, 1 + best(i + 1, used | 1 << u | 1 << v))
        return top

    return best(0, 0)
