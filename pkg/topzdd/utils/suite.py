__all__ = [
    "SUITE",
    "SizeReport",
    "TraverseReport",
    "size_report",
    "probe_depths",
    "run_suite",
]

import logging
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

import numpy as np

from topzdd.ZddStore import naive_bytes
from topzdd.utils import deps
from topzdd.utils.zddtest import zddtest

logger = logging.getLogger(__name__)

# desk-scale acceptance suite
SUITE = (
    "powerset:A=8",
    "powerset:A=64",
    "powerset:A=1000",
    "bounded_range:A=500,B=250",
    "bounded_card:A=100,B=50",
    "knapsack:A=100,W=100,C=500,seed=1",
    "knapsack:A=100,W=100,C=500,seed=2",
    "knapsack:A=100,W=100,C=500,seed=3",
    "matchings:complete=6",
    "matchings:grid=4",
    "grid_paths:n=3",
    "grid_paths:n=4",
    "grid_paths:n=5",
    "nqueens:n=4",
    "nqueens:n=5",
    "nqueens:n=6",
    "nqueens:n=7",
    "nqueens:n=8",
)


@dataclass
class SizeReport:
    """Sizes of one family in both representations (bytes)"""
    family: str
    n: int
    c: int
    naive_bytes: int
    topzdd_bytes: int
    components: Dict[str, int] = field(default_factory=dict)
    build_seconds: float = 0.0

    @property
    def ratio(self) -> float:
        return self.topzdd_bytes / self.naive_bytes if self.naive_bytes else math.inf

    def as_dict(self) -> Dict[str, object]:
        out = asdict(self)
        out["ratio"] = self.ratio
        return out


@dataclass
class TraverseReport:
    """Random-walk timing of both representations"""
    family: str
    steps: int
    seed: Optional[int]
    us_per_step_topzdd: float
    us_per_step_zdd: float

    def as_dict(self) -> Dict[str, object]:
        return asdict(self)


def size_report(tz, family: str = "", build_seconds: float = 0.0) -> SizeReport:
    return SizeReport(family=family or tz.family, n=tz.n, c=tz.c,
                      naive_bytes=naive_bytes(tz.n, tz.c),
                      topzdd_bytes=tz.size_in_bytes(),
                      components=tz.component_bytes(),
                      build_seconds=build_seconds)


def probe_depths(tz, probes: int, seed: Optional[int] = None) -> int:
    """Largest descent depth of label/zero/one over random nodes"""
    if tz.n == 0 or probes <= 0:
        return 0
    rng = np.random.default_rng(seed)
    deepest = 0
    for x in rng.integers(1, tz.n, size=probes, endpoint=True).tolist():
        for query in (tz.label, tz.zero, tz.one):
            deepest = max(deepest, query(x, return_depth=True)[1])
    return deepest


def _run_one(text: str, probes: int, seed: Optional[int]) -> Dict[str, object]:
    from topzdd.build import compress_zdd
    from topzdd.families import FamilySpec

    spec = FamilySpec.parse(text)
    start = time.perf_counter()
    store, root = spec.build()
    tz, info = compress_zdd(store, root, family=str(spec))
    elapsed = time.perf_counter() - start
    record = size_report(tz, str(spec), elapsed).as_dict()
    record.update(
        verified=zddtest(tz, store, root, raiseerror=False),
        height=info.height,
        rounds=info.rounds,
        spanning_edges=info.spanning_edges,
        vertices=info.vertices,
        dummies=info.dummies,
        height_bound=6 * math.log2(info.spanning_edges) if info.spanning_edges > 1 else 0,
        max_depth=probe_depths(tz, probes, seed),
    )
    logger.info("%s: n=%d, %d -> %d bytes, verified=%s", text, tz.n,
                record["naive_bytes"], record["topzdd_bytes"], record["verified"])
    return record


def run_suite(families: Sequence[str] = SUITE, probes: int = 100,
              seed: Optional[int] = 0, comm=None) -> List[Dict[str, object]]:
    """Build, compress and verify every family of the suite.

    With mpi4py available and several ranks in ``comm`` (``COMM_WORLD``
    by default) the families are dealt to the ranks round-robin and the
    records gathered on rank 0; other ranks return an empty list.

    Parameters
    ----------
    families : :obj:`list`, optional
        Family descriptions in ``kind:key=value`` form
    probes : :obj:`int`, optional
        Random nodes per family for the depth check
    seed : :obj:`int`, optional
        Seed of the probes
    comm : :obj:`mpi4py.MPI.Comm`, optional
        Communicator

    Returns
    -------
    records : :obj:`list`
        One dictionary per family, in suite order

    """
    if comm is None and deps.mpi_enabled:
        from mpi4py import MPI
        comm = MPI.COMM_WORLD
    rank, size = (comm.Get_rank(), comm.Get_size()) if comm is not None else (0, 1)
    mine = [(i, _run_one(text, probes, seed))
            for i, text in enumerate(families) if i % size == rank]
    if size == 1:
        return [record for _, record in mine]
    gathered = comm.gather(mine, root=0)
    if rank != 0:
        return []
    return [record for _, record in sorted(r for part in gathered for r in part)]
