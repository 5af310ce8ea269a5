__all__ = [
    "complete_graph",
    "grid_graph",
    "read_edge_list",
    "simple_paths",
]

from pathlib import Path
from typing import Iterator, List, Tuple, Union

from topzdd.utils.errors import ParseError

Edge = Tuple[int, int]


def complete_graph(k: int) -> List[Edge]:
    """Edges ``(i, j)``, ``i < j``, of :math:`K_k` in lexicographic order"""
    if k < 1:
        raise ValueError(f"complete graph needs k >= 1, got {k}")
    return [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1)]


def grid_graph(n: int) -> List[Edge]:
    """Edges of the ``n x n`` vertex grid.

    Vertices are numbered row-major from 1; for every vertex the edge to the
    right neighbour is listed before the edge to the neighbour below.
    """
    if n < 1:
        raise ValueError(f"grid needs n >= 1 vertices per side, got {n}")
    edges = []
    for r in range(n):
        for c in range(n):
            v = r * n + c + 1
            if c + 1 < n:
                edges.append((v, v + 1))
            if r + 1 < n:
                edges.append((v, v + n))
    return edges


def read_edge_list(path: Union[str, Path]) -> List[Edge]:
    """Read an undirected simple graph, one ``u v`` pair per line.

    Vertex ids are 1-based, ``#`` starts a comment and blank lines are
    skipped. The order of the lines defines the edge (variable) order.

    Raises
    ------
    ParseError
        On malformed lines, self-loops or repeated edges.

    """
    edges, seen = [], set()
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"{path}:{lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: vertex ids must be integers") from None
        if u < 1 or v < 1:
            raise ParseError(f"{path}:{lineno}: vertex ids are 1-based")
        if u == v:
            raise ParseError(f"{path}:{lineno}: self-loop on vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"{path}:{lineno}: repeated edge {u}-{v}")
        seen.add(key)
        edges.append((u, v))
    return edges


def simple_paths(edges: List[Edge], s: int, t: int) -> Iterator[Tuple[int, ...]]:
    """Edge-index sets (1-based, ascending) of all simple ``s``-``t`` paths.

    Iterative backtracking over an adjacency list; the trivial path
    yields the empty set when ``s == t``.
    """
    adj = {}
    for idx, (u, v) in enumerate(edges, start=1):
        adj.setdefault(u, []).append((v, idx))
        adj.setdefault(v, []).append((u, idx))
    if s == t:
        yield ()
        return
    on_path = {s}
    verts = [s]
    used: List[int] = []
    stack = [iter(adj.get(s, []))]
    while stack:
        step = next(stack[-1], None)
        if step is None:
            stack.pop()
            v = verts.pop()
            if verts:
                on_path.discard(v)
                used.pop()
            continue
        w, idx = step
        if w in on_path:
            continue
        if w == t:
            yield tuple(sorted(used + [idx]))
            continue
        on_path.add(w)
        verts.append(w)
        used.append(idx)
        stack.append(iter(adj.get(w, [])))

