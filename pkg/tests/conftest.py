import pytest

from topzdd.build import compress_zdd
from topzdd.families import FamilySpec
from topzdd.utils import deps

if deps.mpi_enabled:
    from mpi4py import MPI

    def pytest_itemcollected(item):
        """Append MPI rank to the test ID as it is collected."""
        if MPI.COMM_WORLD.Get_size() > 1:
            item._nodeid += f"[Rank {MPI.COMM_WORLD.Get_rank()}]"


# desk-scale families shared by the build and query tests
SMALL_SUITE = [
    "powerset:A=8",
    "powerset:A=64",
    "bounded_range:A=40,B=10",
    "bounded_card:A=30,B=6",
    "knapsack:A=30,W=50,C=200,seed=1",
    "matchings:complete=6",
    "matchings:grid=3",
    "grid_paths:n=3",
    "grid_paths:n=4",
    "nqueens:n=5",
    "nqueens:n=6",
]


@pytest.fixture(scope="session")
def compressed():
    """Build and compress a family once per session.

    Returns a callable mapping a family description to
    ``(store, root, tz, info)``.
    """
    cache = {}

    def get(text):
        if text not in cache:
            spec = FamilySpec.parse(text)
            store, root = spec.build()
            tz, info = compress_zdd(store, root, family=str(spec))
            cache[text] = (store, root, tz, info)
        return cache[text]
    return get
