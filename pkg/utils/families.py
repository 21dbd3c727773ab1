"""
Family Formulas
Closed-form χ_md values and explicit witness colorings for the named families,
plus the constructive colorings behind the α and matching upper bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from utils.graph import (
    FamilyKind,
    FamilySpec,
    Graph,
    complement,
    induced_subgraph,
    is_connected,
    iter_bits,
    multistar_pendants,
)
from utils.invariants import chromatic_number, is_independent_set, matching_number
from utils.mdc import Coloring


@dataclass(frozen=True)
class FormulaResult:
    """
    Attributes:
        value: χ_md from the closed form
        witness: Coloring using exactly ``value`` colors
        provenance: Which branch of which formula produced the value
    """
    value: int
    witness: Coloring
    provenance: str


# Explicit path colorings for P_1..P_13.
PATH_SEQUENCES: Dict[int, Tuple[int, ...]] = {
    1: (1,),
    2: (1, 2),
    3: (1, 2, 1),
    4: (1, 2, 1, 2),
    5: (1, 2, 1, 2, 1),
    6: (1, 2, 1, 2, 1, 3),
    7: (3, 1, 2, 1, 2, 1, 3),
    8: (3, 1, 2, 1, 2, 1, 2, 3),
    9: (3, 1, 2, 1, 2, 1, 2, 3, 1),
    10: (3, 1, 2, 1, 2, 1, 2, 1, 3, 2),
    11: (3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 3),
    12: (3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 3, 4),
    13: (1, 2, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4, 1),
}

# Cycle colorings where the path sequence does not close up properly.
CYCLE_SEQUENCES: Dict[int, Tuple[int, ...]] = {
    3: (1, 2, 3),
    5: (1, 2, 1, 2, 3),
    7: (1, 2, 1, 2, 1, 2, 3),
    9: PATH_SEQUENCES[9],
    10: PATH_SEQUENCES[10],
    11: (3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 4),
    12: PATH_SEQUENCES[12],
}

# Orders from which the mod-3 path construction takes over.
PATH_FORMULA_FROM = 14
CYCLE_FORMULA_FROM = 13


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def path_formula_coloring(n: int) -> Tuple[int, ...]:
    """
    Mod-3 coloring of P_n (1-indexed positions i).

    Positions i ≡ 0 get color 1, i ≡ 1 get color 2 (the last vertex gets
    ⌈n/6⌉+2 instead), and i ≡ 2 get ⌈i/6⌉+2, so every third vertex sits in a
    class of size at most two. Valid for n >= 13.
    """
    if n < CYCLE_FORMULA_FROM:
        raise ValueError(f"Mod-3 path coloring needs n >= {CYCLE_FORMULA_FROM}, got {n}")
    colors = []
    for i in range(1, n + 1):
        r = i % 3
        if r == 0:
            colors.append(1)
        elif r == 1:
            colors.append(_ceil_div(n, 6) + 2 if i == n else 2)
        else:
            colors.append(_ceil_div(i, 6) + 2)
    return tuple(colors)


# ============================================================================
# CLOSED FORMS
# ============================================================================

def _path_value(n: int) -> Tuple[int, str]:
    if n == 1:
        return 1, "path: 1 for n = 1"
    if n <= 5:
        return 2, "path: 2 for 2 <= n <= 5"
    if n <= 10:
        return 3, "path: 3 for 6 <= n <= 10"
    if n <= 13:
        return 4, "path: 4 for 11 <= n <= 13"
    return _ceil_div(n, 6) + 2, "path: ceil(n/6)+2 for n >= 14"


def _cycle_value(n: int) -> Tuple[int, str]:
    if n in (4, 6, 8):
        return 2, "cycle: 2 for n in {4,6,8}"
    if n in (3, 5, 7, 9, 10):
        return 3, "cycle: 3 for n in {3,5,7,9,10}"
    if n in (11, 12):
        return 4, "cycle: 4 for n in {11,12}"
    return _ceil_div(n, 6) + 2, "cycle: ceil(n/6)+2 for n >= 13"


def _alternating(n: int) -> List[int]:
    return [1 + i % 2 for i in range(n)]


def _corona_cycle_coloring(n: int) -> List[int]:
    """Cycle v_1..v_n at 0..n-1, pendant u_i at n+i-1."""
    colors = [0] * (2 * n)

    def v(i: int) -> int:
        return i - 1

    def u(i: int) -> int:
        return n + i - 1

    if n % 2:
        half = (n - 1) // 2
        for i in range(1, half + 1):
            colors[v(2 * i + 1)] = colors[u(2 * i)] = i
            colors[v(2 * i)] = colors[u(2 * i - 1)] = (n + 3) // 2
        colors[v(1)] = colors[u(n)] = (n + 1) // 2
    else:
        # Split the class {v_even, u_odd} into pairs; {v_odd, u_even} keeps color 1.
        for i in range(1, n + 1):
            if i % 2:
                colors[v(i)] = 1
            else:
                colors[u(i)] = 1
        for i in range(1, n // 2 + 1):
            colors[v(2 * i)] = colors[u(2 * i - 1)] = i + 1
    return colors


def _double_star_coloring(a: int, b: int) -> List[int]:
    colors = [0] * (a + b)
    leaves_u = range(2, a + 1)
    leaves_v = range(a + 1, a + b)
    if a == 2 or b == 2:
        colors[1] = 1
        colors[0] = 2
        for x in leaves_u:
            colors[x] = 1
        for y in leaves_v:
            colors[y] = 2
    else:
        colors[0], colors[1] = 1, 2
        for leaf in list(leaves_u) + list(leaves_v):
            colors[leaf] = 3
    return colors


def _multistar_coloring(spec: FamilySpec) -> List[int]:
    counts = spec.params
    n = len(counts)
    blocks = multistar_pendants(spec)
    colors = [0] * spec.order
    for j in range(n):
        colors[j] = j + 1

    short = [i for i, a in enumerate(counts) if a < n]
    if not short:
        for block in blocks:
            for p in block:
                colors[p] = n + 1
        return colors

    i = short[0]
    others = [j + 1 for j in range(n) if j != i]
    for j, block in enumerate(blocks):
        if j == i:
            for p, c in zip(block, others):
                colors[p] = c
        else:
            for p in block:
                colors[p] = i + 1
    return colors


def chi_md_closed_form(spec: FamilySpec) -> FormulaResult:
    """Closed-form χ_md of a family instance with its witness."""
    kind = spec.kind
    p = spec.params

    if kind == FamilyKind.PATH:
        value, rule = _path_value(p[0])
    elif kind == FamilyKind.CYCLE:
        value, rule = _cycle_value(p[0])
    elif kind == FamilyKind.COMPLETE:
        value, rule = p[0], "complete: n"
    elif kind == FamilyKind.COMPLETE_BIPARTITE:
        value, rule = 2, "complete bipartite: 2"
    elif kind == FamilyKind.STAR:
        value, rule = 2, "star: 2"
    elif kind == FamilyKind.EMPTY:
        value, rule = _ceil_div(p[0], 2), "edgeless: ceil(n/2)"
    elif kind == FamilyKind.WHEEL:
        value, rule = (3, "wheel: 3 for even rim") if p[0] % 2 == 0 else (4, "wheel: 4 for odd rim")
    elif kind == FamilyKind.DOUBLE_STAR:
        if p[0] >= 3 and p[1] >= 3:
            value, rule = 3, "double star: 3 for a, b >= 3"
        else:
            value, rule = 2, "double star: 2 when a = 2 or b = 2"
    elif kind == FamilyKind.MULTISTAR:
        n = len(p)
        if any(a < n for a in p):
            value, rule = n, "multistar: n when some a_i < n"
        else:
            value, rule = n + 1, "multistar: n+1 when every a_i >= n"
    elif kind == FamilyKind.CORONA_CYCLE:
        value, rule = _ceil_div(p[0], 2) + 1, "cycle corona: ceil(n/2)+1"
    else:
        raise ValueError(f"No closed form for {kind}")

    return FormulaResult(value, witness_coloring(spec), rule)


def witness_coloring(spec: FamilySpec) -> Coloring:
    """Explicit coloring attaining the closed form, numbered as in ``family_graph``."""
    kind = spec.kind
    p = spec.params

    if kind == FamilyKind.PATH:
        n = p[0]
        colors = PATH_SEQUENCES[n] if n < PATH_FORMULA_FROM else path_formula_coloring(n)
    elif kind == FamilyKind.CYCLE:
        n = p[0]
        if n in (4, 6, 8):
            colors = _alternating(n)
        elif n in CYCLE_SEQUENCES:
            colors = CYCLE_SEQUENCES[n]
        else:
            colors = path_formula_coloring(n)
    elif kind == FamilyKind.COMPLETE:
        colors = range(1, p[0] + 1)
    elif kind == FamilyKind.COMPLETE_BIPARTITE:
        colors = [1] * p[0] + [2] * p[1]
    elif kind == FamilyKind.STAR:
        colors = [1] + [2] * (p[0] - 1)
    elif kind == FamilyKind.EMPTY:
        colors = [v // 2 + 1 for v in range(p[0])]
    elif kind == FamilyKind.WHEEL:
        n = p[0]
        if n % 2 == 0:
            colors = _alternating(n) + [3]
        else:
            colors = _alternating(n - 1) + [3, 4]
    elif kind == FamilyKind.DOUBLE_STAR:
        colors = _double_star_coloring(*p)
    elif kind == FamilyKind.MULTISTAR:
        colors = _multistar_coloring(spec)
    elif kind == FamilyKind.CORONA_CYCLE:
        colors = _corona_cycle_coloring(p[0])
    else:
        raise ValueError(f"No witness construction for {kind}")
    return Coloring(tuple(colors))


# ============================================================================
# CONSTRUCTIVE UPPER BOUNDS
# ============================================================================

def witness_from_alpha_bound(g: Graph) -> Coloring:
    """
    Coloring with at most χ + ⌈α/2⌉ - 1 colors for a connected graph.

    The last class of a χ-coloring is grown to a maximal independent set; two of
    its vertices keep the color and the rest are paired off onto new colors.
    Every other vertex has a neighbor in one of those classes of size <= 2.
    """
    if not is_connected(g):
        raise ValueError("Alpha-bound construction needs a connected graph")
    chi = chromatic_number(g)
    colors = list(chi.witness)
    last = chi.value
    members = {v for v in range(g.n) if colors[v] == last}

    for v in range(g.n):
        if v not in members and not any(u in members for u in iter_bits(g.adj[v])):
            members.add(v)
            colors[v] = last

    ordered = sorted(members)
    fresh = last
    for i in range(2, len(ordered), 2):
        fresh += 1
        for v in ordered[i:i + 2]:
            colors[v] = fresh
    return Coloring.compact(colors)


def witness_from_matching_bound(
    g: Graph,
    independent: Iterable[int],
    matching: Iterable[Tuple[int, int]],
) -> Coloring:
    """
    Coloring with n - |M| - |I| + 1 colors (n - |M| when I is empty).

    I shares one color, each pair of M shares a color, everything else is a
    singleton. Vertices of I reach a class of size <= 2 through any neighbor.

    Args:
        g: Connected graph of order >= 2
        independent: Independent set I of g
        matching: Matching of the complement of g - I
    """
    if g.n < 2:
        raise ValueError("Matching-bound construction needs at least two vertices")
    if not is_connected(g):
        raise ValueError("Matching-bound construction needs a connected graph")
    chosen = sorted(set(independent))
    for v in chosen:
        g._check_vertex(v)
    if not is_independent_set(g, chosen):
        raise ValueError(f"Vertex set {chosen} is not independent")

    in_set = set(chosen)
    paired = set()
    pairs = []
    for a, b in matching:
        for x in (a, b):
            g._check_vertex(x)
        if a == b or a in in_set or b in in_set:
            raise ValueError(f"Pair ({a}, {b}) is not an edge of the complement of G - I")
        if g.has_edge(a, b):
            raise ValueError(f"Pair ({a}, {b}) is an edge of G, not of its complement")
        if a in paired or b in paired:
            raise ValueError(f"Pairs are not disjoint at ({a}, {b})")
        paired.update((a, b))
        pairs.append((a, b))

    colors = [0] * g.n
    for v in chosen:
        colors[v] = 1
    fresh = 1
    for a, b in pairs:
        fresh += 1
        colors[a] = colors[b] = fresh
    for v in range(g.n):
        if not colors[v]:
            fresh += 1
            colors[v] = fresh
    return Coloring.compact(colors)


def complement_matching_outside(g: Graph, independent: Iterable[int]) -> List[Tuple[int, int]]:
    """Maximum matching of the complement of g - I, in g's vertex numbering."""
    rest = sorted(set(range(g.n)) - set(independent))
    if not rest:
        return []
    sub, index_map = induced_subgraph(g, rest)
    matched = matching_number(complement(sub)).witness
    return sorted((index_map[a], index_map[b]) for a, b in matched)


# ============================================================================
# CORONA AND UNION BOUNDS
# ============================================================================

def corona_lower_bound(g: Graph, chi: int) -> int:
    """max{χ(G), ⌈n/2⌉+1} for χ_md(G∘K_1)."""
    return max(chi, _ceil_div(g.n, 2) + 1)


def corona_upper_bound(g: Graph, chi: int) -> int:
    """χ(G) + ⌈n/2⌉ - 1 for χ_md(G∘K_1), G connected of order >= 2."""
    return chi + _ceil_div(g.n, 2) - 1


def disjoint_union_coloring(parts: Sequence[Coloring]) -> Coloring:
    """Concatenate component colorings with disjoint color ranges."""
    colors: List[int] = []
    offset = 0
    for part in parts:
        colors.extend(c + offset for c in part.colors)
        offset += part.k
    return Coloring(tuple(colors))
