"""Test the benchmark family constructions against brute-force oracles"""
import numpy as np
import pytest

from topzdd import ZddStore, BOT, TOP
from topzdd.families import (
    FamilySpec,
    complete_graph,
    grid_graph,
    read_edge_list,
    simple_paths,
    gen_bounded_range,
    knapsack_weights,
    nqueens_solutions,
    powerset_oracle,
    bounded_range_oracle,
    bounded_card_oracle,
    knapsack_oracle,
    matchings_oracle,
    grid_paths_oracle,
    grid_paths_count,
    nqueens_oracle,
)
from topzdd.utils.errors import ParseError

rng = np.random.default_rng(42)

par1 = {"A": 8, "B": 0}
par2 = {"A": 10, "B": 3}
par3 = {"A": 12, "B": 11}
par4 = {"A": 12, "B": 5}

# known solution counts
NQUEENS = {1: 1, 2: 0, 3: 0, 4: 2, 5: 10, 6: 4, 7: 40, 8: 92}
GRID_PATHS = {1: 1, 2: 2, 3: 12, 4: 184, 5: 8512}


def _random_member(store, root):
    s, v = [], root
    while v > TOP:
        if store.lo(v) == BOT or rng.random() < 0.5:
            s.append(store.label(v))
            v = store.hi(v)
        else:
            v = store.lo(v)
    return s


def _family(text):
    store, root = FamilySpec.parse(text).build()
    return store, root, set(store.enumerate(root))


@pytest.mark.parametrize("par", [(par1), (par2), (par3), (par4)])
def test_bounded(par):
    """bounded_range and bounded_card against subset filters"""
    A, B = par["A"], par["B"]
    if B < A:
        _, _, got = _family(f"bounded_range:A={A},B={B}")
        assert got == bounded_range_oracle(A, B)
    _, _, got = _family(f"bounded_card:A={A},B={B}")
    assert got == bounded_card_oracle(A, B)


def test_powerset():
    """Power set chain"""
    store, root, got = _family("powerset:A=9")
    assert got == powerset_oracle(9)
    assert store.node_count(root) == 9


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_knapsack(seed):
    """Knapsack with A=14 against the subset-sum oracle"""
    weights = knapsack_weights(14, 30, seed)
    assert all(a >= b for a, b in zip(weights, weights[1:]))
    _, _, got = _family(f"knapsack:A=14,W=30,C=100,seed={seed}")
    assert got == knapsack_oracle([int(w) for w in weights], 100)


def test_knapsack_deterministic():
    """Same seed, same weights and same family"""
    a, ra = FamilySpec.parse("knapsack:A=100,W=100,C=500,seed=7").build()
    b, rb = FamilySpec.parse("knapsack:A=100,W=100,C=500,seed=7").build()
    assert a.preorder_edges(ra) == b.preorder_edges(rb)
    assert list(knapsack_weights(50, 100, 7)) == list(knapsack_weights(50, 100, 7))


@pytest.mark.parametrize("graph", ["complete=3", "complete=6", "grid=3"])
def test_matchings(graph):
    """Matchings against the independent-edge-set oracle"""
    spec = FamilySpec.parse(f"matchings:{graph}")
    _, _, got = _family(str(spec))
    assert got == matchings_oracle(spec.edges())


def test_matchings_file(tmp_path):
    """Edge-list file input"""
    path = tmp_path / "graph.txt"
    path.write_text("# a 4-cycle\n1 2\n2 3\n\n3 4\n4 1\n")
    edges = read_edge_list(path)
    assert edges == [(1, 2), (2, 3), (3, 4), (4, 1)]
    _, _, got = _family(f"matchings:graph={path}")
    assert got == {(), (1,), (2,), (3,), (4,), (1, 3), (2, 4)}
    for text in ("1 1\n", "1 2\n2 1\n", "1\n", "0 1\n", "a b\n"):
        path.write_text(text)
        with pytest.raises(ParseError):
            read_edge_list(path)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_grid_paths(n):
    """Corner-to-corner paths: DFS count, and the subset oracle for n <= 3"""
    store, root, got = _family(f"grid_paths:n={n}")
    assert store.count_sets(root) == GRID_PATHS[n] == grid_paths_count(n)
    if n <= 3:
        assert got == grid_paths_oracle(n)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 7, 8])
def test_nqueens(n):
    """n-queens against the permutation oracle"""
    store, root = FamilySpec.parse(f"nqueens:n={n}").build()
    assert store.count_sets(root) == NQUEENS[n]
    if n <= 7:
        assert set(store.enumerate(root)) == nqueens_oracle(n)
    assert len(list(nqueens_solutions(n))) == NQUEENS[n]


def test_graphs():
    """Builtin graphs and the path enumerator"""
    assert complete_graph(3) == [(1, 2), (1, 3), (2, 3)]
    assert grid_graph(2) == [(1, 2), (1, 3), (2, 4), (3, 4)]
    assert len(grid_graph(4)) == 2 * 4 * 3
    assert sorted(simple_paths(grid_graph(2), 3, 2)) == [(1, 2), (3, 4)]
    assert list(simple_paths(grid_graph(2), 1, 1)) == [()]


def test_state_machine_reuse():
    """Families built into a shared store reuse identical nodes"""
    store = ZddStore(10)
    f = gen_bounded_range(store, 10, 2)
    before = len(store)
    assert gen_bounded_range(store, 10, 2) == f
    assert len(store) == before


def test_spec_roundtrip():
    """parse / str round trip in canonical key order"""
    spec = FamilySpec.parse("knapsack: seed=7, C=500, W=100, A=100")
    assert str(spec) == "knapsack:A=100,W=100,C=500,seed=7"
    assert FamilySpec.parse(str(spec)) == spec
    assert hash(FamilySpec.parse(str(spec))) == hash(spec)
    assert FamilySpec.parse("nqueens:n=6").universe() == 36
    assert FamilySpec.parse("grid_paths:n=4").universe() == 24
    assert FamilySpec.parse("matchings:complete=6").universe() == 15


@pytest.mark.parametrize("text", [
    "unknown:A=3",
    "powerset",
    "powerset:A=0",
    "powerset:A=x",
    "powerset:A=3,A=4",
    "powerset:B=3",
    "powerset:A",
    "bounded_range:A=5,B=5",
    "bounded_card:A=5,B=6",
    "knapsack:A=5,W=0,C=3,seed=1",
    "knapsack:A=5,W=3,C=3",
    "matchings:complete=3,grid=3",
    "matchings:complete=0",
    "nqueens:n=0",
])
def test_spec_errors(text):
    """Malformed descriptions raise ParseError"""
    with pytest.raises(ParseError):
        FamilySpec.parse(text)


def test_file_family(tmp_path):
    """file: kind reads the text format"""
    path = tmp_path / "f.txt"
    path.write_text("c=5\n1 3\n\n2 5\n")
    spec = FamilySpec.parse(f"file:path={path}")
    assert spec.universe() == 5
    _, _, got = _family(str(spec))
    assert got == {(1, 3), (), (2, 5)}
    store = ZddStore(8)
    _, root = spec.build(store)
    assert set(store.enumerate(root)) == got
    with pytest.raises(ValueError):
        spec.build(ZddStore(3))


def test_bounded_range_skips():
    """Sets not containing 1, and the empty set, belong to bounded_range"""
    store = ZddStore(3)
    f = gen_bounded_range(store, 3, 0)
    assert set(store.enumerate(f)) == {(), (1,), (2,), (3,)}
    store = ZddStore(12)
    f = gen_bounded_range(store, 12, 5)
    assert store.member(f, [])
    assert store.member(f, [7, 12])
    assert not store.member(f, [6, 12])
    assert set(store.enumerate(f)) == bounded_range_oracle(12, 5)


@pytest.mark.parametrize("text", ["powerset:A=10", "bounded_card:A=12,B=4",
                                  "bounded_range:A=12,B=5",
                                  "knapsack:A=14,W=30,C=100,seed=2",
                                  "matchings:complete=6", "matchings:grid=3"])
def test_monotone(text):
    """Families closed under removal of any element"""
    store, root, got = _family(text)
    assert store.is_monotone(root, sorted(got))
    for s in got:
        for e in s:
            assert tuple(x for x in s if x != e) in got


@pytest.mark.parametrize("text", ["bounded_card:A=100,B=50",
                                  "knapsack:A=100,W=100,C=500,seed=1",
                                  "matchings:grid=4"])
def test_monotone_sampled(text):
    """Monotonicity on random members of the larger families"""
    store, root = FamilySpec.parse(text).build()
    samples = [_random_member(store, root) for _ in range(200)]
    assert all(store.member(root, s) for s in samples)
    assert store.is_monotone(root, samples)


def test_monotone_detects():
    """A family missing a subset of a member is not monotone"""
    store = ZddStore(3)
    f = store.from_sets([(1, 2), (1,), ()])
    assert not store.is_monotone(f, [(1, 2)])
    assert store.is_monotone(f, [(1,), ()])
