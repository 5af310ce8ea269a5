"""Test complement edge placement, top DAG compression and encoding"""
import pytest

from topzdd import ZddStore
from topzdd.build import (
    extract_spanning_tree,
    build_top_tree,
    place_complement_edges,
    dag_compress,
    expand_top_dag,
    encode,
    compress_zdd,
)
from topzdd.build.compress import DST_BOT, DST_TOP
from topzdd.utils.errors import BuildError
from conftest import SMALL_SUITE


def _pipeline(store, root):
    tree = extract_spanning_tree(store, root)
    top = build_top_tree(tree)
    placement = place_complement_edges(tree, top)
    return tree, top, placement


@pytest.mark.parametrize("text", SMALL_SUITE)
def test_placement(text, compressed):
    """Every complement edge lands in a cluster holding both endpoints"""
    store, root, _, _ = compressed(text)
    tree, top, placement = _pipeline(store, root)
    n = tree.n
    placed = sorted(placement.root_edges + [e.edge for bag in placement.bags for e in bag])
    assert placed == sorted(tree.complement)
    assert all(src == 1 for src, _, _ in placement.root_edges)
    for v, bag in enumerate(placement.bags):
        nodes = top.cluster_nodes(v)
        for entry in bag:
            src, dst, t = entry.edge
            assert nodes[entry.src - 1] == src
            assert entry.type == t
            if dst > n:
                assert entry.dst == (DST_BOT if dst == n + 1 else DST_TOP)
            else:
                assert nodes[entry.dst - 2] == dst


@pytest.mark.parametrize("text", SMALL_SUITE)
@pytest.mark.parametrize("hoist", [False, True])
def test_dag(text, hoist, compressed):
    """Unfolding T' gives back the top tree with its bags"""
    store, root, _, _ = compressed(text)
    tree, top, placement = _pipeline(store, root)
    dag = dag_compress(top, placement, hoist=hoist)
    assert expand_top_dag(dag) == top.as_nested(dag.vertex_bags)
    if not hoist:
        assert expand_top_dag(dag) == top.as_nested(placement.bags)
        assert dag.hoisted == 0
    kept = sum(len(b) for b in dag.vertex_bags)
    assert kept + len(dag.root_edges) == len(tree.complement)
    assert len(dag.root_edges) - len(placement.root_edges) == dag.hoisted
    assert len(dag.parens) == 2 * len(dag.vertices)
    assert len(dag.vertices) <= len(top)
    # dummies point backwards to non-dummy preorders
    seen = 0
    for kind, value in dag.vertices:
        if kind == "dummy":
            assert 1 <= value <= seen
        else:
            seen += 1


def test_sharing():
    """Power set chains share their clusters"""
    store = ZddStore(256)
    _, top, placement = _pipeline(store, store.power_set(256))
    dag = dag_compress(top, placement)
    assert len(top) == 2 * 255 - 1
    assert len(dag.nodes) < 64
    assert dag.dummies > 0


def test_encode(compressed):
    """Component lengths follow the T' shape"""
    store, root, tz, info = compressed("matchings:grid=3")
    assert tz.audit()
    assert tz.n == info.n == store.node_count(root)
    assert tz.n_vertices == info.vertices
    assert tz.n_dummies == info.dummies
    assert tz.B_edge.ones == len(tz.src_in) == len(tz.dst_in) == len(tz.type_in)
    assert tz.B_src_root.ones == len(tz.dst_root) == len(tz.type_root)
    assert tz.B_src_root.zeros == tz.n
    assert tz.B_edge.zeros == tz.n_vertices
    assert info.complement_edges == tz.n + 1
    assert set(info.timings) >= {"spanning tree", "top tree", "encode"}


def test_degenerate():
    """Zero or one branching node: no T', root edges only"""
    store = ZddStore(4)
    for root, n in ((store.empty(), 0), (store.base(), 0), (store.singleton([3]), 1)):
        tz, info = compress_zdd(store, root)
        assert tz.n == n and tz.degenerate
        assert tz.n_vertices == 0
        assert info.height == 0
    tz, _ = compress_zdd(store, store.singleton([3]))
    assert tz.label(1) == 3
    assert tz.decompress_all() == store.preorder_edges(store.singleton([3]))


def test_encode_duplicate_edge():
    """Two edges of the same type leaving one node cannot be encoded"""
    store = ZddStore(3)
    f = store.power_set(3)
    tree, top, placement = _pipeline(store, f)
    dag = dag_compress(top, placement, hoist=False)
    dag.root_edges.append(dag.root_edges[0])
    with pytest.raises(BuildError):
        encode(tree, dag)
