"""
Graph and coloring file formats.

DIMACS ``.col``: ``c`` comment lines, one ``p edge n m`` header, ``e u v`` edges
with 1-indexed endpoints.
Edge list: first data line is n, then ``u v`` per line with 0-indexed endpoints;
``#`` starts a comment.
Coloring files: whitespace-separated integers, one color per vertex in index order.
"""

from pathlib import Path
from typing import List, Tuple, Union

from utils.graph import Graph, build_graph
from utils.reporting import log_warning


DIMACS_SUFFIXES = {'.col', '.dimacs', '.dim'}


class GraphFormatError(ValueError):
    """Malformed graph or coloring file."""


def detect_format(path: Union[str, Path]) -> str:
    return 'dimacs' if Path(path).suffix.lower() in DIMACS_SUFFIXES else 'edgelist'


def _pair(tokens: List[str], line_no: int, path: Path) -> Tuple[int, int]:
    try:
        return int(tokens[0]), int(tokens[1])
    except (ValueError, IndexError):
        raise GraphFormatError(f"{path}:{line_no}: expected two integer endpoints") from None


def _parse_dimacs(path: Path) -> Graph:
    n = None
    declared = None
    edges = []
    with open(path) as f:
        for line_no, line in enumerate(f, 1):
            tokens = line.split()
            if not tokens or tokens[0] == 'c':
                continue
            if tokens[0] == 'p':
                if n is not None:
                    raise GraphFormatError(f"{path}:{line_no}: duplicate problem line")
                if len(tokens) != 4 or tokens[1] not in ('edge', 'col'):
                    raise GraphFormatError(f"{path}:{line_no}: header must read 'p edge <n> <m>'")
                try:
                    n, declared = int(tokens[2]), int(tokens[3])
                except ValueError:
                    raise GraphFormatError(f"{path}:{line_no}: header counts must be integers") from None
                continue
            if tokens[0] == 'e':
                if n is None:
                    raise GraphFormatError(f"{path}:{line_no}: edge before 'p edge' header")
                u, v = _pair(tokens[1:], line_no, path)
                if not (1 <= u <= n and 1 <= v <= n):
                    raise GraphFormatError(f"{path}:{line_no}: endpoint outside 1..{n} in 'e {u} {v}'")
                edges.append((u - 1, v - 1))
                continue
            raise GraphFormatError(f"{path}:{line_no}: unexpected line '{line.strip()}'")

    if n is None:
        raise GraphFormatError(f"{path}: missing 'p edge <n> <m>' header")
    g = _build(n, edges, path)
    if declared != g.edge_count:
        log_warning(f"{path}: header declares {declared} edges, found {g.edge_count} distinct")
    return g


def _parse_edgelist(path: Path) -> Graph:
    n = None
    edges = []
    with open(path) as f:
        for line_no, line in enumerate(f, 1):
            tokens = line.split('#', 1)[0].split()
            if not tokens:
                continue
            if n is None:
                try:
                    n = int(tokens[0])
                except ValueError:
                    raise GraphFormatError(f"{path}:{line_no}: first line must be the vertex count") from None
                if len(tokens) != 1:
                    raise GraphFormatError(f"{path}:{line_no}: first line must hold only the vertex count")
                continue
            u, v = _pair(tokens, line_no, path)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"{path}:{line_no}: endpoint outside 0..{n - 1} in '{u} {v}'")
            edges.append((u, v))
    if n is None:
        raise GraphFormatError(f"{path}: empty edge list, expected the vertex count")
    return _build(n, edges, path)


def _build(n: int, edges, path: Path) -> Graph:
    try:
        return build_graph(n, edges)
    except ValueError as e:
        raise GraphFormatError(f"{path}: {e}") from None


def parse_graph_file(path: Union[str, Path], fmt: str = 'auto') -> Graph:
    """
    Read a graph file.

    Args:
        path: File to read
        fmt: 'dimacs', 'edgelist' or 'auto' (by extension)

    Raises:
        GraphFormatError: malformed header, endpoint out of range, self-loop
    """
    path = Path(path)
    if fmt == 'auto':
        fmt = detect_format(path)
    if fmt == 'dimacs':
        return _parse_dimacs(path)
    if fmt == 'edgelist':
        return _parse_edgelist(path)
    raise ValueError(f"Unknown graph format '{fmt}' (expected dimacs, edgelist or auto)")


def write_edgelist(g: Graph, path: Union[str, Path]):
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    Path(path).write_text('\n'.join(lines) + '\n')


def write_dimacs(g: Graph, path: Union[str, Path]):
    lines = [f"p edge {g.n} {g.edge_count}"] + [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    Path(path).write_text('\n'.join(lines) + '\n')


def read_coloring_file(path: Union[str, Path]) -> List[int]:
    text = Path(path).read_text()
    try:
        return [int(token) for token in text.split()]
    except ValueError:
        raise GraphFormatError(f"{path}: colors must be whitespace-separated integers") from None
