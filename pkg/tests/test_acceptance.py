"""Test the desk-scale suite end to end: lossless compression, size
against the naive table, top tree height, query depth and cluster sizes
"""
import math

import numpy as np
import pytest

from topzdd import ZddStore, compress_zdd
from topzdd.cli import main
from topzdd.query import decompress_clusters
from topzdd.utils import SUITE, probe_depths, run_suite, zddtest

rng = np.random.default_rng(42)

# reduced from the 10**4 probes of `topzdd suite`
PROBES = 300


@pytest.mark.parametrize("text", SUITE)
def test_suite(text, compressed):
    """Lossless, logarithmic height, bounded depth, exact cluster sizes"""
    store, root, tz, info = compressed(text)
    assert zddtest(tz, store, root)
    if info.spanning_edges > 1:
        assert info.height <= 6 * math.log2(info.spanning_edges)
    assert probe_depths(tz, PROBES, seed=1) <= 4 * max(info.height, 1)
    for p, nodes in decompress_clusters(tz).items():
        assert tz.cluster_size(p) == len(nodes)


@pytest.mark.parametrize("text", ["powerset:A=1000", "bounded_range:A=500,B=250",
                                  "bounded_card:A=100,B=50",
                                  "knapsack:A=100,W=100,C=500,seed=1"])
def test_size(text, compressed):
    """Compressed containers are smaller than the naive node table"""
    store, root, tz, _ = compressed(text)
    naive = store.naive_size_bytes(root)
    assert tz.size_in_bytes() < naive
    if text.startswith(("powerset", "bounded_range")):
        assert 2 * tz.size_in_bytes() <= naive


def test_powerset_scaling():
    """T' of a power set grows additively per doubling"""
    vertices = {}
    store = ZddStore(4096)
    for m in range(5, 13):
        A = 2 ** m
        tz, info = compress_zdd(store, store.power_set(A))
        vertices[A] = tz.n_vertices
        assert info.vertices == tz.n_vertices
    for m in range(5, 12):
        assert vertices[2 ** (m + 1)] - vertices[2 ** m] <= 12
    assert vertices[4096] < 200


def test_bench_protocol(tmp_path, capsys):
    """Default benchmark executes 65536 edge choices"""
    path = tmp_path / "k.tz"
    assert main(["build", "bounded_card:A=100,B=50", str(path)]) == 0
    capsys.readouterr()
    assert main(["bench", str(path), "--json"]) == 0
    out = capsys.readouterr().out
    assert '"steps": 65536' in out


@pytest.mark.mpi(min_size=2)
def test_suite_mpi():
    """Families dealt over ranks are gathered on rank 0 in suite order"""
    from mpi4py import MPI

    families = ["powerset:A=8", "nqueens:n=4", "matchings:complete=4",
                "grid_paths:n=2", "bounded_card:A=10,B=3"]
    comm = MPI.COMM_WORLD
    records = run_suite(families, probes=10, comm=comm)
    if comm.Get_rank() == 0:
        assert [r["family"] for r in records] == families
        assert all(r["verified"] for r in records)
    else:
        assert records == []
