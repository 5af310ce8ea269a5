"""Test the ZddStore class and the text family format"""
import numpy as np
import pytest

from topzdd import ZddStore, Terminal, BOT, TOP, read_family, write_family, naive_bytes
from topzdd.families import all_subsets
from topzdd.utils.errors import CapacityError, ParseError, ZddOrderError

rng = np.random.default_rng(42)

par1 = {"c": 6, "nsets": 10}
par2 = {"c": 8, "nsets": 40}
par3 = {"c": 10, "nsets": 200}


def _random_family(c, nsets):
    subsets = list(all_subsets(c))
    picks = rng.choice(len(subsets), size=nsets, replace=False)
    return {subsets[i] for i in picks}


def test_reduction():
    """Zero-suppression, uniqueness and order checks of make_node"""
    store = ZddStore(3)
    a = store.make_node(3, BOT, TOP)
    assert store.make_node(3, BOT, TOP) == a
    assert store.make_node(2, a, BOT) == a
    b = store.make_node(1, a, a)
    assert store.label(b) == 1 and store.lo(b) == a and store.hi(b) == a
    assert len(store) == 4
    with pytest.raises(ZddOrderError):
        store.make_node(3, a, TOP)
    with pytest.raises(ZddOrderError):
        store.make_node(4, BOT, TOP)
    assert store.audit()


@pytest.mark.parametrize("par", [(par1), (par2), (par3)])
def test_from_sets(par):
    """Explicit construction, enumeration, counting and membership"""
    family = _random_family(par["c"], par["nsets"])
    store = ZddStore(par["c"])
    f = store.from_sets(family)
    assert set(store.enumerate(f)) == family
    assert store.count_sets(f) == len(family)
    for s in all_subsets(par["c"]):
        assert store.member(f, s) == (s in family)
    # canonical: same family, same handle
    assert store.from_sets(sorted(family, reverse=True)) == f
    assert store.audit()


@pytest.mark.parametrize("par", [(par1), (par2)])
def test_apply(par):
    """Union, intersection and difference agree with set algebra"""
    F = _random_family(par["c"], par["nsets"])
    G = _random_family(par["c"], par["nsets"])
    store = ZddStore(par["c"])
    f, g = store.from_sets(F), store.from_sets(G)
    assert set(store.enumerate(store.union(f, g))) == F | G
    assert set(store.enumerate(store.intersection(f, g))) == F & G
    assert set(store.enumerate(store.difference(f, g))) == F - G
    assert store.union(f, g) == store.union(g, f)
    assert store.union(f, g) == store.from_sets(F | G)


def test_constructors():
    """Power set, singleton, base and empty families"""
    store = ZddStore(10)
    p = store.power_set(10)
    assert store.node_count(p) == 10
    assert store.count_sets(p) == 2 ** 10
    assert store.enumerate(store.singleton([4, 2, 9])) == [(2, 4, 9)]
    assert store.enumerate(store.base()) == [()]
    assert store.enumerate(store.empty()) == []
    assert store.power_set(0) == TOP
    with pytest.raises(ValueError):
        store.power_set(11)
    with pytest.raises(ValueError):
        store.from_sets([(0, 1)])
    with pytest.raises(CapacityError):
        store.enumerate(p, limit=100)


def test_preorder_edges():
    """Preorder naming explores the 0-edge first"""
    store = ZddStore(3)
    f = store.from_sets([(1, 2), (2, 3), (3,)])
    edges = store.preorder_edges(f)
    # 1 -0-> {2,3},{3} ; 1 -1-> {2}
    assert edges[0][0] == 1
    assert [e[0] for e in edges] == [1, 2, 3, 2]
    assert edges == [(1, 2, 4), (2, 3, 3), (3, Terminal.BOT, Terminal.TOP),
                     (2, Terminal.BOT, Terminal.TOP)]
    other, root = ZddStore.from_edges(edges, 3)
    assert other.preorder_edges(root) == edges
    assert set(other.enumerate(root)) == {(1, 2), (2, 3), (3,)}


def test_naive_size():
    """Baseline size formula"""
    store = ZddStore(1000)
    f = store.power_set(1000)
    # 2 * 1000 * 9 + 1000 * 9 bits
    assert store.naive_size_bytes(f) == 3375
    assert naive_bytes(0, 5) == 0
    assert naive_bytes(1, 1) == 0
    assert naive_bytes(8, 8) == (2 * 8 * 3 + 8 * 3) // 8


def test_monotone():
    """Closure under element removal on sampled members"""
    store = ZddStore(6)
    down = store.from_sets(s for s in all_subsets(6) if len(s) <= 2)
    up = store.from_sets(s for s in all_subsets(6) if len(s) >= 2)
    samples = list(all_subsets(6))
    assert store.is_monotone(down, samples)
    assert not store.is_monotone(up, samples)


def test_text_format(tmp_path):
    """write_family / read_family round trip and malformed input"""
    store = ZddStore(7)
    family = {(), (1, 7), (2, 3, 4), (5,)}
    f = store.from_sets(family)
    path = tmp_path / "family.txt"
    assert write_family(path, store, f) == 4
    text = path.read_text()
    assert text.startswith("c=7\n")
    assert "\n\n" in text
    other, g = read_family(path)
    assert other.c == 7
    assert set(other.enumerate(g)) == family

    bad = tmp_path / "bad.txt"
    bad.write_text("7\n1 2\n")
    with pytest.raises(ParseError):
        read_family(bad)
    bad.write_text("c=3\n2 1\n")
    with pytest.raises(ParseError):
        read_family(bad)
    bad.write_text("c=3\n1 4\n")
    with pytest.raises(ParseError):
        read_family(bad)
    bad.write_text("c=3\n1 x\n")
    with pytest.raises(ParseError):
        read_family(bad)
