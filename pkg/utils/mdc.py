"""
Majority Dominator Colorings
Verifier and exact solver for majority dominator colorings and χ_md.

A proper coloring is a majority dominator coloring when every vertex v has a color
class V_i with |N[v] ∩ V_i| >= ⌈|V_i|/2⌉, i.e. 2·|N[v] ∩ V_i| >= |V_i|.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple

from utils.graph import Graph, iter_bits
from utils.invariants import (
    SOLVED,
    UNDECIDED,
    InvariantResult,
    chromatic_number,
    max_degree,
)
from utils.oracles import set_partitions
from utils.reporting import log_warning
from utils.search import Rule, SearchBudgetExceeded, SearchStats, find_coloring


BRUTE_FORCE_MAX_ORDER = 10


# ============================================================================
# TYPES
# ============================================================================

@dataclass(frozen=True)
class Coloring:
    """
    Total vertex coloring with contiguous color ids 1..k.

    Attributes:
        colors: colors[v] is the color of vertex v
    """
    colors: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'colors', tuple(self.colors))
        used = set(self.colors)
        if any(not isinstance(c, int) or c < 1 for c in used):
            raise ValueError(f"Colors must be positive integers, got {sorted(used, key=str)}")
        k = max(used, default=0)
        if used != set(range(1, k + 1)):
            missing = sorted(set(range(1, k + 1)) - used)
            raise ValueError(f"Color ids must be contiguous from 1; unused: {missing}")

    @property
    def k(self) -> int:
        return max(self.colors, default=0)

    def classes(self) -> List[frozenset]:
        """Color classes; entry i holds color i+1."""
        buckets: List[Set[int]] = [set() for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            buckets[c - 1].add(v)
        return [frozenset(b) for b in buckets]

    def class_masks(self) -> List[int]:
        masks = [0] * self.k
        for v, c in enumerate(self.colors):
            masks[c - 1] |= 1 << v
        return masks

    @classmethod
    def compact(cls, colors: Sequence[int]) -> 'Coloring':
        """Renumber arbitrary labels to 1..k keeping their relative order."""
        mapping = {c: i + 1 for i, c in enumerate(sorted(set(colors)))}
        return cls(tuple(mapping[c] for c in colors))


class ViolationKind(Enum):
    NOT_PROPER = 'NotProper'
    NO_DOMINATED_CLASS = 'NoDominatedClass'


@dataclass(frozen=True)
class Violation:
    """
    One reason a coloring fails.

    For NO_DOMINATED_CLASS, ``counts[i]`` is |N[v] ∩ V_i| and ``thresholds[i]`` is
    ⌈|V_i|/2⌉, keyed by color id.
    """
    kind: ViolationKind
    vertices: Tuple[int, ...]
    counts: Dict[int, int] = field(default_factory=dict)
    thresholds: Dict[int, int] = field(default_factory=dict)

    def describe(self) -> str:
        if self.kind == ViolationKind.NOT_PROPER:
            u, v = self.vertices
            return f"edge ({u}, {v}) is monochromatic"
        detail = ', '.join(
            f"color {c}: {self.counts[c]}/{self.thresholds[c]}" for c in sorted(self.counts)
        )
        return f"vertex {self.vertices[0]} dominates no class ({detail})"

    def to_dict(self) -> dict:
        return {
            'kind': self.kind.value,
            'vertices': list(self.vertices),
            'counts': {str(c): n for c, n in self.counts.items()},
            'thresholds': {str(c): t for c, t in self.thresholds.items()},
        }


# ============================================================================
# VERIFIER
# ============================================================================

def _check_total(g: Graph, c: Coloring):
    if len(c.colors) != g.n:
        raise ValueError(f"Coloring covers {len(c.colors)} vertices, graph has {g.n}")


def dominated_classes(g: Graph, c: Coloring, v: int) -> Set[int]:
    """Colors i with |N[v] ∩ V_i| >= ⌈|V_i|/2⌉; properness is not required."""
    _check_total(g, c)
    closed = g.closed_mask(v)
    return {
        i + 1
        for i, cls in enumerate(c.class_masks())
        if 2 * (cls & closed).bit_count() >= cls.bit_count()
    }


def verify_mdc(g: Graph, c: Coloring) -> List[Violation]:
    """
    Every reason ``c`` is not a majority dominator coloring of ``g``.

    Returns:
        Empty list when the coloring is valid
    """
    _check_total(g, c)
    violations = [
        Violation(ViolationKind.NOT_PROPER, (u, v))
        for u, v in g.edges()
        if c.colors[u] == c.colors[v]
    ]
    masks = c.class_masks()
    thresholds = {i + 1: -(-cls.bit_count() // 2) for i, cls in enumerate(masks)}
    for v in range(g.n):
        closed = g.closed_mask(v)
        counts = {i + 1: (cls & closed).bit_count() for i, cls in enumerate(masks)}
        if not any(counts[i] >= thresholds[i] for i in counts):
            violations.append(Violation(ViolationKind.NO_DOMINATED_CLASS, (v,), counts, dict(thresholds)))
    return violations


def is_mdc(g: Graph, c: Coloring) -> bool:
    return not verify_mdc(g, c)


# ============================================================================
# SOLVER
# ============================================================================

def mdc_feasible(
    g: Graph,
    k: int,
    budget: Optional[int] = None,
    stats: Optional[SearchStats] = None,
) -> Optional[Coloring]:
    """
    A majority dominator coloring with at most ``k`` colors, or None.

    Raises:
        ValueError: k outside 1..n
        SearchBudgetExceeded: budget spent before the question was settled
    """
    if not 1 <= k <= g.n:
        raise ValueError(f"Color count {k} outside 1..{g.n}")
    found = find_coloring(g, k, Rule.MAJORITY, budget, stats)
    return Coloring(tuple(found)) if found is not None else None


def mdc_number(g: Graph, budget: Optional[int] = None) -> InvariantResult:
    """
    χ_md by an ascending scan from χ(g).

    Feasibility in k is never assumed monotone, so each k is settled in turn. An
    exhausted budget yields status 'UNDECIDED' and no value.
    """
    if g.n == 0:
        raise ValueError("Majority dominator chromatic number is undefined for the graph with no vertices")
    stats = SearchStats()
    chi = chromatic_number(g, budget, stats)
    if not chi.solved:
        log_warning(f"Budget of {budget} nodes spent while computing χ (order {g.n})")
        return InvariantResult(None, None, stats.nodes, UNDECIDED)

    # Δ = n-1: the universal vertex sits alone in its class, which everyone dominates.
    if max_degree(g) == g.n - 1:
        return InvariantResult(chi.value, Coloring(chi.witness), stats.nodes, SOLVED)

    try:
        for k in range(chi.value, g.n + 1):
            found = mdc_feasible(g, k, budget, stats)
            if found is not None:
                return InvariantResult(found.k, found, stats.nodes, SOLVED)
    except SearchBudgetExceeded:
        log_warning(f"Budget of {budget} nodes spent at k={k} (order {g.n})")
        return InvariantResult(None, None, stats.nodes, UNDECIDED)
    raise RuntimeError("Singleton classes always form a majority dominator coloring")


def brute_force_mdc(g: Graph) -> InvariantResult:
    """χ_md by plain enumeration of set partitions; a test oracle."""
    if g.n == 0:
        raise ValueError("Majority dominator chromatic number is undefined for the graph with no vertices")
    if g.n > BRUTE_FORCE_MAX_ORDER:
        raise ValueError(f"Brute force limited to order {BRUTE_FORCE_MAX_ORDER}, got {g.n}")
    tried = 0
    for k in range(1, g.n + 1):
        for labels in set_partitions(g.n, k):
            tried += 1
            coloring = Coloring(tuple(labels))
            if not verify_mdc(g, coloring):
                return InvariantResult(k, coloring, tried)
    raise RuntimeError("Singleton classes always form a majority dominator coloring")


def recolor_for_high_degree(g: Graph, chi_coloring: Sequence[int]) -> Coloring:
    """
    Turn a χ-coloring into a majority dominator coloring when Δ(g) >= n-2.

    Take u of maximum degree. Its class is contained in {u, w} where w is the one
    vertex u misses (if any); moving w into u's class keeps the coloring proper,
    and every vertex then dominates that class of size <= 2.
    """
    if g.n == 0:
        raise ValueError("Graph has no vertices")
    if max_degree(g) < g.n - 2:
        raise ValueError(f"Needs Δ >= n-2, got Δ={max_degree(g)} with n={g.n}")
    colors = list(chi_coloring)
    u = max(range(g.n), key=lambda v: (g.adj[v].bit_count(), -v))
    missed = list(iter_bits(g.vertex_mask & ~g.closed_mask(u)))
    if missed:
        w = missed[0]
        colors[w] = colors[u]
    return Coloring.compact(colors)
