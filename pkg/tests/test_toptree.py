"""Test the spanning tree extraction and the greedy top tree"""
import math

import pytest

from topzdd import ZddStore, BOT, TOP
from topzdd.build import extract_spanning_tree, build_top_tree
from topzdd.build.toptree import LEAF, VERTICAL
from topzdd.utils.errors import TopTreeError
from conftest import SMALL_SUITE


def _check_clusters(top):
    """Sizes, boundaries and local preorders of every cluster"""
    tree = top.tree
    for v in range(len(top)):
        nodes = top.cluster_nodes(v)
        assert len(nodes) == top.size[v]
        assert nodes[0] == top.top[v]
        if top.bot[v]:
            # bottom boundary has no child inside its own cluster
            assert nodes[top.bot_local[v] - 1] == top.bot[v]
            assert tree.label[top.bot[v]] - tree.label[top.top[v]] == top.bot_label[v]
            assert not any(tree.parent[x] == top.bot[v] for x in nodes)
        if top.kind[v] == VERTICAL:
            left = top.cluster_nodes(top.left[v])
            assert nodes[top.junction[v] - 1] == top.bot[top.left[v]]
            assert top.junction[v] == left.index(top.bot[top.left[v]]) + 1
        p = top.parent[v]
        if p >= 0:
            # local preorders carried to the parent name the same nodes
            outer = top.cluster_nodes(p)
            for k in range(1, top.size[v] + 1):
                assert outer[top.local_in(v, k, p) - 1] == nodes[k - 1]


def test_spanning_tree():
    """Preorder naming, tree edges and complement edges of a small ZDD"""
    store = ZddStore(3)
    f = store.from_sets([(1, 2), (2, 3), (3,)])
    tree = extract_spanning_tree(store, f)
    assert tree.n == 4
    assert tree.label == [0, 1, 2, 3, 2]
    assert tree.parent == [0, 0, 1, 2, 1]
    assert tree.edge_type == [-1, -1, 0, 0, 1]
    assert tree.children[1] == [2, 4]
    # n + 1 complement edges: 2 -1-> 3 and four terminal edges
    assert sorted(tree.complement) == [(2, 3, 1), (3, 5, 0), (3, 6, 1), (4, 5, 0), (4, 6, 1)]
    assert tree.root_label == 1 and tree.spanning_edges == 3
    assert tree.terminal_id(BOT) == 5 and tree.terminal_id(TOP) == 6


def test_spanning_terminal():
    """Terminal-only families have an empty tree"""
    store = ZddStore(4)
    for root in (BOT, TOP):
        tree = extract_spanning_tree(store, root)
        assert tree.n == 0 and tree.complement == []
        assert tree.root_label == 5


def test_merge_errors():
    """Illegal merges and trees without edges"""
    store = ZddStore(3)
    tree = extract_spanning_tree(store, store.power_set(3))
    top = build_top_tree(tree)
    leaves = [v for v in range(len(top)) if top.kind[v] == LEAF]
    with pytest.raises(TopTreeError):
        top.merge_vertical(leaves[1], leaves[0])
    single = extract_spanning_tree(store, store.singleton([2]))
    with pytest.raises(TopTreeError):
        build_top_tree(single)


def test_chain():
    """A chain collapses in logarithmically many rounds"""
    store = ZddStore(64)
    tree = extract_spanning_tree(store, store.power_set(64))
    top = build_top_tree(tree)
    assert top.size[top.root] == 64
    assert top.height <= math.ceil(math.log2(63)) + 1
    assert len(top) == 2 * 63 - 1
    assert top.rounds <= math.ceil(math.log2(63))
    _check_clusters(top)


@pytest.mark.parametrize("text", SMALL_SUITE)
def test_suite(text, compressed):
    """Root cluster covers the tree, height within 6 log2 of the edges"""
    store, root, _, info = compressed(text)
    tree = extract_spanning_tree(store, root)
    if tree.n < 2:
        return
    top = build_top_tree(tree)
    assert top.size[top.root] == tree.n
    assert top.top[top.root] == 1 and top.bot[top.root] == 0
    assert sorted(top.leaf_of[2:]) == [v for v in range(len(top)) if top.kind[v] == LEAF]
    if tree.spanning_edges > 1:
        assert top.height <= 6 * math.log2(tree.spanning_edges)
    assert top.height == info.height
    if tree.n <= 400:
        _check_clusters(top)


def test_nested():
    """Nested form of a small top tree"""
    store = ZddStore(3)
    tree = extract_spanning_tree(store, store.power_set(3))
    top = build_top_tree(tree)
    # two edges of a chain merged vertically, junction at local 2
    assert top.as_nested() == ("V", 2, 1, ("leaf", 0, 1), ("leaf", 0, 1))
