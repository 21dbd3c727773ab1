"""
Graph Core
Immutable bit-mask graphs, family constructors and the products used by the
majority dominator coloring toolkit.

Vertices are 0..n-1. Row i of ``adj`` is an int whose bit j is set iff ij is an edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Tuple

import networkx as nx


# Largest order accepted anywhere in the toolkit. Search cost, not the mask
# width, is the real limit.
MAX_ORDER = 128


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


# ============================================================================
# GRAPH
# ============================================================================

@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph with bit-mask adjacency rows.

    Attributes:
        n: Number of vertices
        adj: Tuple of neighbor masks, one per vertex
    """
    n: int
    adj: Tuple[int, ...]
    edge_count: int = field(init=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Vertex count must be nonnegative, got {self.n}")
        if self.n > MAX_ORDER:
            raise ValueError(f"Graph order {self.n} exceeds the supported maximum of {MAX_ORDER}")
        if len(self.adj) != self.n:
            raise ValueError(f"Expected {self.n} adjacency rows, got {len(self.adj)}")

        full = (1 << self.n) - 1
        degree_sum = 0
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"Vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"Self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"Adjacency is not symmetric on edge ({v}, {u})")
            degree_sum += row.bit_count()
        object.__setattr__(self, 'edge_count', degree_sum // 2)

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> List[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def closed_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted."""
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def _check_vertex(self, v: int):
        if not 0 <= v < self.n:
            raise ValueError(f"Vertex {v} out of range for a graph of order {self.n}")


def build_graph(n: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    """
    Build a graph from an edge list.

    Duplicate edges collapse silently; self-loops and out-of-range endpoints raise.

    Args:
        n: Number of vertices
        edges: Pairs (u, v) with 0 <= u, v < n

    Returns:
        Graph with symmetric adjacency
    """
    if n < 0:
        raise ValueError(f"Vertex count must be nonnegative, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"Graph order {n} exceeds the supported maximum of {MAX_ORDER}")

    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"Self-loop at vertex {u} is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def from_networkx(g: nx.Graph) -> Graph:
    """Convert a networkx graph, relabelling nodes 0..n-1 in sorted order."""
    nodes = sorted(g.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return build_graph(len(nodes), [(index[a], index[b]) for a, b in g.edges()])


def encode_graph(g: Graph) -> str:
    """graph6 string for reports and failure records."""
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode('ascii').strip()


def decode_graph(text: str) -> Graph:
    return from_networkx(nx.from_graph6_bytes(text.strip().encode('ascii')))


# ============================================================================
# STRUCTURAL QUERIES
# ============================================================================

def closed_neighborhood(g: Graph, v: int) -> frozenset:
    """N[v] = N(v) with v itself."""
    return frozenset(iter_bits(g.closed_mask(v)))


def components(g: Graph) -> List[frozenset]:
    """Connected components ordered by their smallest vertex."""
    parts = []
    unseen = g.vertex_mask
    while unseen:
        start = unseen & -unseen
        comp = start
        frontier = start
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= g.adj[v]
            frontier = reach & ~comp
            comp |= frontier
        parts.append(frozenset(iter_bits(comp)))
        unseen &= ~comp
    return parts


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Tuple[Graph, List[int]]:
    """
    Subgraph induced by ``keep``, reindexed 0..|keep|-1.

    Returns:
        (subgraph, index_map) where index_map[i] is the original vertex of new vertex i
    """
    index_map = sorted(set(keep))
    for v in index_map:
        g._check_vertex(v)
    position = {v: i for i, v in enumerate(index_map)}
    edges = [
        (position[u], position[v])
        for u in index_map
        for v in iter_bits(g.adj[u])
        if v in position and u < v
    ]
    return build_graph(len(index_map), edges), index_map


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def bipartitions(g: Graph) -> List[Tuple[frozenset, frozenset]]:
    """
    Every proper 2-coloring of g as a pair (X, Y).

    Each component can be flipped independently, so a bipartite graph with
    c components yields 2**c ordered pairs. Returns [] if g is not bipartite.
    """
    sides = []
    for comp in components(g):
        root = min(comp)
        side = {root: 0}
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if u not in side:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return []
        sides.append((
            frozenset(v for v, s in side.items() if s == 0),
            frozenset(v for v, s in side.items() if s == 1),
        ))

    result = []
    for flips in range(1 << len(sides)):
        x, y = set(), set()
        for i, (a, b) in enumerate(sides):
            if flips >> i & 1:
                a, b = b, a
            x |= a
            y |= b
        result.append((frozenset(x), frozenset(y)))
    return result


def is_bipartite(g: Graph) -> bool:
    return bool(bipartitions(g)) if g.n else True


# ============================================================================
# PRODUCTS
# ============================================================================

def disjoint_union(*graphs: Graph) -> Graph:
    """Blocks are numbered in argument order."""
    edges = []
    offset = 0
    for h in graphs:
        edges.extend((u + offset, v + offset) for u, v in h.edges())
        offset += h.n
    return build_graph(offset, edges)


def corona_product(g: Graph, h: Graph) -> Graph:
    """
    G∘H: one copy of H per vertex of G, joined to that vertex.

    Copy j occupies vertices g.n + j*h.n .. g.n + (j+1)*h.n - 1, so G∘K_1 puts the
    pendant of vertex i at g.n + i.
    """
    if g.n == 0 or h.n == 0:
        raise ValueError("Corona product needs two nonempty graphs")
    edges = list(g.edges())
    for j in range(g.n):
        base = g.n + j * h.n
        edges.extend((base + a, base + b) for a, b in h.edges())
        edges.extend((j, base + a) for a in range(h.n))
    return build_graph(g.n * (1 + h.n), edges)


def strong_product(g: Graph, h: Graph) -> Graph:
    """G⊠H with vertex (a, b) numbered a*h.n + b."""
    if g.n == 0 or h.n == 0:
        raise ValueError("Strong product needs two nonempty graphs")
    edges = []
    for a in range(g.n):
        a_closed = g.closed_mask(a)
        for b in range(h.n):
            b_closed = h.closed_mask(b)
            for a2 in iter_bits(a_closed):
                for b2 in iter_bits(b_closed):
                    if (a2, b2) > (a, b):
                        edges.append((a * h.n + b, a2 * h.n + b2))
    return build_graph(g.n * h.n, edges)


# ============================================================================
# FAMILIES
# ============================================================================

class FamilyKind(Enum):
    EMPTY = 'empty'
    COMPLETE = 'complete'
    PATH = 'path'
    CYCLE = 'cycle'
    COMPLETE_BIPARTITE = 'complete_bipartite'
    STAR = 'star'
    DOUBLE_STAR = 'doublestar'
    MULTISTAR = 'multistar'
    WHEEL = 'wheel'
    CORONA_CYCLE = 'corona_cycle'


@dataclass(frozen=True)
class FamilySpec:
    """
    Named family instance.

    Parameters per kind:
        EMPTY, COMPLETE, PATH, STAR, WHEEL, CORONA_CYCLE, CYCLE: (n,)
        COMPLETE_BIPARTITE: (m, n)
        DOUBLE_STAR: (a, b) center degrees
        MULTISTAR: (a_1, ..., a_n) pendant counts, n = len(params)
    """
    kind: FamilyKind
    params: Tuple[int, ...]

    def __post_init__(self):
        p = self.params
        kind = self.kind
        if not all(isinstance(x, int) for x in p):
            raise ValueError(f"{kind.value}: parameters must be integers, got {p}")

        if kind == FamilyKind.MULTISTAR:
            if len(p) < 1 or any(a < 1 for a in p):
                raise ValueError(f"multistar needs n >= 1 pendant counts, each >= 1, got {p}")
            return

        expected = 2 if kind in (FamilyKind.COMPLETE_BIPARTITE, FamilyKind.DOUBLE_STAR) else 1
        if len(p) != expected:
            raise ValueError(f"{kind.value} takes {expected} parameter(s), got {len(p)}")

        minimum = {
            FamilyKind.EMPTY: 1,
            FamilyKind.COMPLETE: 1,
            FamilyKind.PATH: 1,
            FamilyKind.CYCLE: 3,
            FamilyKind.COMPLETE_BIPARTITE: 1,
            FamilyKind.STAR: 2,
            FamilyKind.DOUBLE_STAR: 2,
            FamilyKind.WHEEL: 3,
            FamilyKind.CORONA_CYCLE: 3,
        }[kind]
        if any(x < minimum for x in p):
            raise ValueError(f"{kind.value} parameters must be >= {minimum}, got {p}")

    @property
    def order(self) -> int:
        p = self.params
        if self.kind in (FamilyKind.COMPLETE_BIPARTITE, FamilyKind.DOUBLE_STAR):
            return p[0] + p[1]
        if self.kind == FamilyKind.MULTISTAR:
            return len(p) + sum(p)
        if self.kind == FamilyKind.WHEEL:
            return p[0] + 1
        if self.kind == FamilyKind.CORONA_CYCLE:
            return 2 * p[0]
        return p[0]

    @classmethod
    def parse(cls, text: str) -> 'FamilySpec':
        """Parse strings such as ``path:13`` or ``multistar:3,3,3``."""
        name, sep, rest = text.strip().partition(':')
        if not sep or not rest:
            raise ValueError(f"Family spec must look like 'kind:params', got '{text}'")
        try:
            kind = FamilyKind(name.strip().lower())
        except ValueError:
            known = ', '.join(k.value for k in FamilyKind)
            raise ValueError(f"Unknown family '{name}' (known: {known})") from None
        try:
            params = tuple(int(x) for x in rest.split(','))
        except ValueError:
            raise ValueError(f"Family parameters must be integers, got '{rest}'") from None
        return cls(kind, params)

    def __str__(self) -> str:
        return f"{self.kind.value}:{','.join(str(x) for x in self.params)}"


def path_edges(n: int) -> List[Tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def family_graph(spec: FamilySpec) -> Graph:
    """
    Build the graph for a family instance.

    Numbering:
        PATH n: 0..n-1 along the path; CYCLE adds (n-1, 0)
        COMPLETE_BIPARTITE m n: A = 0..m-1, B = m..m+n-1
        STAR n: center 0, leaves 1..n-1
        DOUBLE_STAR a b: centers u = 0, v = 1; leaves of u 2..a, leaves of v a+1..a+b-1
        MULTISTAR: clique 0..n-1, then the pendants of vertex 0, of vertex 1, ...
        WHEEL n: rim cycle 0..n-1, hub n
        CORONA_CYCLE n: cycle 0..n-1, pendant of i at n+i
    """
    kind = spec.kind
    p = spec.params

    if kind == FamilyKind.EMPTY:
        return build_graph(p[0], [])
    if kind == FamilyKind.COMPLETE:
        n = p[0]
        return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])
    if kind == FamilyKind.PATH:
        return build_graph(p[0], path_edges(p[0]))
    if kind == FamilyKind.CYCLE:
        n = p[0]
        return build_graph(n, path_edges(n) + [(n - 1, 0)])
    if kind == FamilyKind.COMPLETE_BIPARTITE:
        m, n = p
        return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])
    if kind == FamilyKind.STAR:
        n = p[0]
        return build_graph(n, [(0, i) for i in range(1, n)])
    if kind == FamilyKind.DOUBLE_STAR:
        a, b = p
        edges = [(0, 1)]
        edges += [(0, x) for x in range(2, a + 1)]
        edges += [(1, y) for y in range(a + 1, a + b)]
        return build_graph(a + b, edges)
    if kind == FamilyKind.MULTISTAR:
        n = len(p)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
        nxt = n
        for i, count in enumerate(p):
            edges += [(i, nxt + t) for t in range(count)]
            nxt += count
        return build_graph(nxt, edges)
    if kind == FamilyKind.WHEEL:
        n = p[0]
        edges = path_edges(n) + [(n - 1, 0)] + [(i, n) for i in range(n)]
        return build_graph(n + 1, edges)
    if kind == FamilyKind.CORONA_CYCLE:
        return corona_product(family_graph(FamilySpec(FamilyKind.CYCLE, p)), build_graph(1, []))
    raise ValueError(f"Unsupported family {kind}")


def multistar_pendants(spec: FamilySpec) -> List[List[int]]:
    """Pendant vertex blocks of a multistar, one list per clique vertex."""
    blocks = []
    nxt = len(spec.params)
    for count in spec.params:
        blocks.append(list(range(nxt, nxt + count)))
        nxt += count
    return blocks
