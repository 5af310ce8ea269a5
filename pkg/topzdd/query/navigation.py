__all__ = [
    "ClusterCursor",
    "cluster_size",
    "label",
    "child",
    "member_compressed",
    "traverse",
    "TraverseResult",
]

import logging
import time
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from topzdd.ZddStore import ZddStore, Terminal, TOP
from topzdd.utils.errors import CorruptionError

logger = logging.getLogger(__name__)

Target = Union[int, Terminal]


# vertex access on T': positions are open parentheses of the BP sequence

def _leaf_index(tz, x: int) -> Tuple[bool, int]:
    """Dummy flag and rank of leaf ``x`` among dummy resp. non-dummy leaves"""
    l = tz.bp.leaf_rank(x)
    dummies = tz.B_dummy.rank1(l)
    if tz.B_dummy.access(l):
        return True, dummies
    return False, l - dummies


def _resolve(tz, x: int) -> int:
    """Position of the vertex a dummy leaf stands for (``x`` itself otherwise)"""
    bp = tz.bp
    if not bp.isleaf(x):
        return x
    dummy, d = _leaf_index(tz, x)
    if not dummy:
        return x
    j = tz.dst_dummy[d - 1]
    # smallest preorder p with j non-dummy vertices among 1..p
    lo, hi = j, bp.nodes
    while lo < hi:
        mid = (lo + hi) // 2
        pos = bp.preorder_select(mid)
        if mid - tz.B_dummy.rank1(bp.leaf_rank(pos)) >= j:
            hi = mid
        else:
            lo = mid + 1
    return bp.preorder_select(lo)


def _size(tz, x: int) -> int:
    """Cluster size of any vertex, dummies included"""
    bp = tz.bp
    if bp.isleaf(x):
        dummy, d = _leaf_index(tz, x)
        if not dummy:
            return 2
        return tz.clsize_at(d) - tz.clsize_at(d - 1)
    l = bp.leaf_rank(bp.leftmost_leaf(x))
    r = bp.leaf_rank(bp.rightmost_leaf(x))
    k = r - l + 1
    ld, rd = tz.B_dummy.rank1(l - 1), tz.B_dummy.rank1(r)
    c = k - (rd - ld)
    return tz.clsize_at(rd) - tz.clsize_at(ld) + 2 * c - (k - 1)


def cluster_size(tz, p: int) -> int:
    """Number of ZDD nodes in the cluster of :math:`T'` vertex ``p``.

    The leaves below ``p`` are split into dummy and non-dummy leaves with
    rank queries on ``B_dummy``: dummies contribute their stored cluster
    sizes (a difference of the cumulative ``clsize``), every other leaf is a
    single edge of two nodes, and each of the ``k - 1`` merges joining the
    ``k`` leaf clusters shares one node.

    Parameters
    ----------
    tz : :obj:`topzdd.TopZdd`
        Compressed ZDD
    p : :obj:`int`
        Preorder of the vertex in :math:`T'` (dummies included)

    Returns
    -------
    size : :obj:`int`
        Cluster size

    Raises
    ------
    IndexError
        If ``p`` is not a vertex of :math:`T'`.
    ValueError
        If ``p`` is a dummy leaf.

    """
    bp = tz.bp
    if not 1 <= p <= bp.nodes:
        raise IndexError(f"T' vertex {p} outside [1, {bp.nodes}]")
    x = bp.preorder_select(p)
    if bp.isleaf(x) and _leaf_index(tz, x)[0]:
        raise ValueError(f"T' vertex {p} is a dummy leaf")
    return _size(tz, x)


@dataclass
class _Vertex:
    kind: str
    left: int = 0
    right: int = 0
    junction: int = 0
    junction_label: int = 0
    edge_type: int = 0
    span: int = 0


def _vertex(tz, x: int) -> _Vertex:
    bp = tz.bp
    if bp.isleaf(x):
        _, j = _leaf_index(tz, x)
        return _Vertex("leaf", edge_type=tz.type_span.access(j),
                       span=tz.label_span[j - 1])
    i = bp.preorder_rank(x) - bp.leaf_rank(x)
    left, right = x + 1, bp.lastchild(x)
    if tz.B_H.access(i):
        return _Vertex("H", left, right)
    v = tz.B_H.rank0(i)
    return _Vertex("V", left, right, tz.preorder_diff[v - 1], tz.label_diff[v - 1])


@dataclass
class ClusterCursor:
    """Position of a descent through :math:`T'`.

    The cursor tracks one ZDD node by its local preorder ``k`` inside the
    cluster of ``vertex`` and the label ``s`` of that cluster's top
    boundary. ``path`` keeps, per step, what is needed to carry a local
    preorder back to the parent cluster, so that any local preorder seen on
    the way down can be turned into a global preorder.

    Attributes
    ----------
    vertex : :obj:`int`
        Current vertex (BP position, never a dummy)
    k : :obj:`int`
        Local preorder of the tracked node
    s : :obj:`int`
        Label of the top boundary node
    path : :obj:`list`
        ``(vertex, kind, from_left, junction, left_size, right_size)`` per step
    dummies : :obj:`int`
        Dummy leaves followed so far

    """
    vertex: int
    k: int
    s: int
    path: List[Tuple[int, str, bool, int, int, int]] = field(default_factory=list)
    dummies: int = 0

    @property
    def depth(self) -> int:
        return len(self.path)

    def enter(self, tz, node: _Vertex, to_left: bool, k: int, s: int,
              left_size: int = 0, right_size: int = 0):
        self.path.append((self.vertex, node.kind, to_left, node.junction,
                          left_size, right_size))
        target = node.left if to_left else node.right
        resolved = _resolve(tz, target)
        self.dummies += resolved != target
        self.vertex, self.k, self.s = resolved, k, s

    def lift(self, k: int, level: Optional[int] = None) -> int:
        """Global preorder of local node ``k`` of the cluster entered after
        ``level`` steps (the current cluster by default)"""
        level = len(self.path) if level is None else level
        for step in reversed(self.path[:level]):
            k = _lift_one(step, k)
        return k


def _descend_into(tz, x: int) -> ClusterCursor:
    """Descend to the leaf cluster of the tree edge entering ``x``"""
    cur = ClusterCursor(1, x, tz.root_label)
    while True:
        node = _vertex(tz, cur.vertex)
        k = cur.k
        if node.kind == "leaf":
            if k != 2:
                raise CorruptionError(f"descent for node {x} ended at local {k}")
            return cur
        if node.kind == "H":
            cl = _size(tz, node.left)
            if k <= cl:
                cur.enter(tz, node, True, k, cur.s, left_size=cl)
            else:
                cur.enter(tz, node, False, k - cl + 1, cur.s, left_size=cl)
            continue
        d, cr = node.junction, _size(tz, node.right)
        if k <= d:
            cur.enter(tz, node, True, k, cur.s, right_size=cr)
        elif k <= d + cr - 1:
            cur.enter(tz, node, False, k - d + 1, cur.s + node.junction_label, right_size=cr)
        else:
            cur.enter(tz, node, True, k - cr + 1, cur.s, right_size=cr)


def _check_node(tz, x: int):
    if not 1 <= x <= tz.n:
        raise IndexError(f"node {x} outside [1, {tz.n}]")


def label(tz, x: int, return_depth: bool = False):
    """Element label of the ZDD node with preorder ``x``.

    Returns
    -------
    label : :obj:`int`
        Label :math:`\\ell(x)`
    depth : :obj:`int`
        Number of descent steps, only with ``return_depth``

    """
    _check_node(tz, x)
    if x == 1:
        return (tz.root_label, 0) if return_depth else tz.root_label
    cur = _descend_into(tz, x)
    value = cur.s + _vertex(tz, cur.vertex).span
    return (value, cur.depth) if return_depth else value


def _decode(tz, code: int, lift) -> Target:
    if code == 0:
        return Terminal.BOT
    if code == 1:
        return Terminal.TOP
    return lift(code - 1)


def _search_bag(tz, p: int, k: int, t: int) -> Optional[int]:
    """Encoded destination of the edge ``(k, t)`` in the bag of vertex ``p``"""
    if tz.B_edge.n == 0:
        return None
    start = tz.B_edge.select0(p - 1) - (p - 1) if p > 1 else 0
    end = tz.B_edge.select0(p) - p
    key = 2 * k + t
    while start < end:
        mid = (start + end) // 2
        probe = 2 * tz.src_in[mid] + tz.type_in.access(mid + 1)
        if probe == key:
            return tz.dst_in[mid]
        if probe < key:
            start = mid + 1
        else:
            end = mid
    return None


def _search_root(tz, x: int, t: int) -> Optional[Target]:
    bv = tz.B_src_root
    start = bv.select0(x - 1) - (x - 1) if x > 1 else 0
    end = bv.select0(x) - x
    for i in range(start, end):
        if tz.type_root.access(i + 1) == t:
            dst = tz.dst_root[i]
            if dst == tz.n + 1:
                return Terminal.BOT
            if dst == tz.n + 2:
                return Terminal.TOP
            return dst
    return None


def _spanning_child(tz, x: int, t: int) -> Tuple[Optional[int], int]:
    """Global preorder of the tree child of ``x`` along a ``t``-edge"""
    cur = ClusterCursor(1, x, tz.root_label)
    while True:
        node = _vertex(tz, cur.vertex)
        k = cur.k
        if node.kind == "leaf":
            if k == 1 and node.edge_type == t:
                return cur.lift(2), cur.depth
            return None, cur.depth
        if node.kind == "H":
            cl = _size(tz, node.left)
            if k == 1:
                cur.enter(tz, node, t == 0, 1, cur.s, left_size=cl)
            elif k <= cl:
                cur.enter(tz, node, True, k, cur.s, left_size=cl)
            else:
                cur.enter(tz, node, False, k - cl + 1, cur.s, left_size=cl)
            continue
        d, cr = node.junction, _size(tz, node.right)
        if k < d:
            cur.enter(tz, node, True, k, cur.s, right_size=cr)
        elif k == d:
            cur.enter(tz, node, False, 1, cur.s + node.junction_label, right_size=cr)
        elif k <= d + cr - 1:
            cur.enter(tz, node, False, k - d + 1, cur.s + node.junction_label, right_size=cr)
        else:
            cur.enter(tz, node, True, k - cr + 1, cur.s, right_size=cr)


def child(tz, x: int, t: int, return_depth: bool = False):
    """Target of the ``t``-edge (0 or 1) leaving the ZDD node with preorder ``x``.

    The tree edge is looked up first by descending towards the clusters
    whose top boundary is ``x``. Otherwise the edge is a complement edge:
    the descent goes to the leaf cluster of the tree edge entering ``x``
    and the bags on the way back up are binary searched for
    ``(local preorder of x, t)``, before the global root edges.

    Returns
    -------
    target : :obj:`int` or :obj:`topzdd.Terminal`
        Preorder of the child or terminal
    depth : :obj:`int`
        Number of descent steps, only with ``return_depth``

    Raises
    ------
    IndexError
        If ``x`` is not a node.
    CorruptionError
        If the edge is not found.

    """
    _check_node(tz, x)
    if t not in (0, 1):
        raise ValueError(f"edge type must be 0 or 1, got {t}")
    depth = 0
    if tz.n > 1:
        found, depth = _spanning_child(tz, x, t)
        if found is not None:
            return (found, depth) if return_depth else found
    if x > 1:
        cur = _descend_into(tz, x)
        depth += cur.depth
        k = 2
        for level in range(cur.depth, -1, -1):
            p = tz.bp.preorder_rank(cur.vertex if level == cur.depth else cur.path[level][0])
            code = _search_bag(tz, p, k, t)
            if code is not None:
                target = _decode(tz, code, lambda kk: cur.lift(kk, level))
                return (target, depth) if return_depth else target
            if level:
                k = _lift_one(cur.path[level - 1], k)
    target = _search_root(tz, x, t)
    if target is None:
        raise CorruptionError(f"node {x} has no {t}-edge")
    return (target, depth) if return_depth else target


def _lift_one(step, k: int) -> int:
    _, kind, from_left, d, left_size, right_size = step
    if kind == "H":
        return k + left_size - 1 if not from_left and k != 1 else k
    if from_left:
        return k + right_size - 1 if k > d else k
    return k + d - 1


def member_compressed(tz, s: Sequence[int]) -> bool:
    """Root-to-terminal membership walk using only label and child queries"""
    if tz.n == 0:
        return tz.root_terminal is Terminal.TOP and not s
    x: Target = 1
    for e in s:
        while not isinstance(x, Terminal) and label(tz, x) < e:
            x = child(tz, x, 0)
        if isinstance(x, Terminal) or label(tz, x) != e:
            return False
        x = child(tz, x, 1)
    while not isinstance(x, Terminal):
        x = child(tz, x, 0)
    return x is Terminal.TOP


@dataclass
class TraverseResult:
    steps: int
    elapsed: float
    trace: Optional[List[Target]] = None

    @property
    def us_per_step(self) -> float:
        return 1e6 * self.elapsed / self.steps if self.steps else 0.0


def traverse(source: Union["ZddStore", object], steps: int = 65536,
             seed: Optional[int] = None, root: Optional[int] = None,
             record: bool = False) -> TraverseResult:
    """Random walk choosing the 0- or 1-edge uniformly at every step.

    The walk starts at the root and restarts there whenever a terminal is
    reached. Both a compressed ZDD and a :class:`topzdd.ZddStore` (with
    ``root``) can be walked; with the same ``seed`` both visit the same
    nodes, recorded in ``trace`` as preorders when ``record`` is set.

    Parameters
    ----------
    source : :obj:`topzdd.TopZdd` or :obj:`topzdd.ZddStore`
        Structure to walk
    steps : :obj:`int`, optional
        Number of edge choices
    seed : :obj:`int`, optional
        Seed of :func:`numpy.random.default_rng`
    root : :obj:`int`, optional
        Root handle, required for a store
    record : :obj:`bool`, optional
        Keep the visited nodes

    Returns
    -------
    result : :obj:`topzdd.query.TraverseResult`
        Step count, elapsed seconds and optional trace

    """
    choices = np.random.default_rng(seed).integers(0, 2, size=steps).tolist()
    trace: Optional[List] = [] if record else None
    if isinstance(source, ZddStore):
        if root is None:
            raise ValueError("walking a store needs its root handle")
        if root <= TOP:
            raise ValueError("cannot walk a terminal-only family")
        lo, hi = source.lo, source.hi
        x = root
        start = time.perf_counter()
        for c in choices:
            x = hi(x) if c else lo(x)
            if x <= TOP:
                x = root
            if record:
                trace.append(x)
        elapsed = time.perf_counter() - start
        if record:
            name = {v: p for p, v in enumerate(source.preorder_order(root), start=1)}
            trace = [name[v] for v in trace]
        return TraverseResult(steps, elapsed, trace)
    if source.n == 0:
        raise ValueError("cannot walk a terminal-only family")
    x = 1
    start = time.perf_counter()
    for c in choices:
        x = source.one(x) if c else source.zero(x)
        if isinstance(x, Terminal):
            x = 1
        if record:
            trace.append(x)
    return TraverseResult(steps, time.perf_counter() - start, trace)
