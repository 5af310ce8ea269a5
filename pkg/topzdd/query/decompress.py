__all__ = [
    "decompress_all",
    "decompress_clusters",
]

from typing import Dict, List, Tuple

from topzdd.ZddStore import PreorderEdge, Terminal
from topzdd.query.navigation import _resolve, _size, _vertex


def _walk(tz, visit):
    """Expand :math:`T'` from the root, handing every vertex (dummies
    resolved) to ``visit(p, vertex, nodes, s)`` with the global preorders of its
    cluster in local order and the label of its top boundary."""
    bp = tz.bp
    stack: List[Tuple[int, List[int], int]] = [(1, list(range(1, tz.n + 1)), tz.root_label)]
    while stack:
        x, nodes, s = stack.pop()
        node = _vertex(tz, x)
        visit(bp.preorder_rank(x), node, nodes, s)
        if node.kind == "leaf":
            continue
        left, right = _resolve(tz, node.left), _resolve(tz, node.right)
        if node.kind == "H":
            cl = _size(tz, left)
            stack.append((right, nodes[:1] + nodes[cl:], s))
            stack.append((left, nodes[:cl], s))
        else:
            d, cr = node.junction, _size(tz, right)
            stack.append((right, nodes[d - 1:d + cr - 1], s + node.junction_label))
            stack.append((left, nodes[:d] + nodes[d + cr - 1:], s))


def _bag(tz, p: int):
    bv = tz.B_edge
    start = bv.select0(p - 1) - (p - 1) if p > 1 else 0
    end = bv.select0(p) - p
    for i in range(start, end):
        yield tz.src_in[i], tz.dst_in[i], tz.type_in.access(i + 1)


def decompress_all(tz) -> List[PreorderEdge]:
    """``(label, zero, one)`` of every node in preorder, terminals as
    :class:`topzdd.Terminal` members, from one traversal of :math:`T'`."""
    n = tz.n
    if n == 0:
        return []
    labels = [0] * (n + 1)
    labels[1] = tz.root_label
    out = [[None, None] for _ in range(n + 1)]

    def target(code, nodes):
        if code == 0:
            return Terminal.BOT
        if code == 1:
            return Terminal.TOP
        return nodes[code - 2]

    def visit(p, node, nodes, s):
        if node.kind == "leaf":
            labels[nodes[1]] = s + node.span
            out[nodes[0]][node.edge_type] = nodes[1]
        for src, dst, t in _bag(tz, p):
            out[nodes[src - 1]][t] = target(dst, nodes)

    if n > 1:
        _walk(tz, visit)
    bv = tz.B_src_root
    i = 0
    for x in range(1, n + 1):
        while bv.access(i + x):
            dst = tz.dst_root[i]
            t = tz.type_root.access(i + 1)
            out[x][t] = Terminal.BOT if dst == n + 1 else Terminal.TOP if dst == n + 2 else dst
            i += 1
    return [(labels[x], out[x][0], out[x][1]) for x in range(1, n + 1)]


def decompress_clusters(tz) -> Dict[int, List[int]]:
    """Global preorders of the cluster of every non-dummy :math:`T'` vertex,
    keyed by its preorder in :math:`T'`."""
    clusters: Dict[int, List[int]] = {}

    def visit(p, node, nodes, s):
        clusters.setdefault(p, nodes)

    if tz.n > 1:
        _walk(tz, visit)
    return clusters
