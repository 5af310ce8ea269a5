__all__ = ["benchmark",
           "mark",
           "BenchRegion",
           ]

import functools
import logging
import os
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple, Union

from topzdd.utils import deps

if deps.mpi_enabled:
    from mpi4py import MPI

# off unless TZDD_BENCH=1
ENABLE_BENCHMARK = int(os.getenv("TZDD_BENCH", 0)) == 1

Mark = Tuple[str, float]

# regions of the benchmarked calls currently running, innermost last
_active: List["BenchRegion"] = []


def _comm():
    return MPI.COMM_WORLD if deps.mpi_enabled else None


def _sync():
    comm = _comm()
    if comm is not None and comm.Get_size() > 1:
        comm.Barrier()


def _rank() -> int:
    comm = _comm()
    return comm.Get_rank() if comm is not None else 0


@dataclass
class BenchRegion:
    """Timed call of a benchmarked function.

    ``events`` keeps, in order of occurrence, the marks placed by the call
    and the regions of the benchmarked functions it called.
    """
    name: str
    level: int
    elapsed: float = 0.0
    events: List[Union[Mark, "BenchRegion"]] = field(default_factory=list)

    def lines(self) -> List[str]:
        inner = "\t" * self.level
        out = ["\t" * (self.level - 1)
               + f"[decorator]{self.name}: total runtime: {self.elapsed:6f} s"]
        previous: Optional[Mark] = None
        for event in self.events:
            if isinstance(event, BenchRegion):
                out.extend(event.lines())
                continue
            if previous is not None:
                out.append(f"{inner}{previous[0]}-->{event[0]}: {event[1] - previous[1]:6f} s")
            previous = event
        return out

    def report(self) -> str:
        return "\n".join(self.lines())


def mark(label: str):
    """Mark a point inside a benchmarked function

    Parameters
    ----------
    label : :obj:`str`
        Label of the mark; the time since the previous mark of the same
        call is reported as ``previous-->label``

    Raises
    ------
    RuntimeError
        If called outside of a benchmarked function while benchmarking
        is enabled.
    """
    if not ENABLE_BENCHMARK:
        return
    if not _active:
        raise RuntimeError("mark() called outside of a benchmarked region")
    _sync()
    _active[-1].events.append((label, time.perf_counter()))


def benchmark(func: Optional[Callable] = None,
              description: Optional[str] = "",
              logger: Optional[logging.Logger] = None,
              ):
    """Time a function and the marks placed inside it.

    Usable bare (``@benchmark``) or with arguments
    (``@benchmark(description=..., logger=...)``). Nested benchmarked calls
    are reported indented inside their caller once the outermost call
    returns, on rank 0 only when running under MPI. When ``TZDD_BENCH``
    is not ``1`` the function is returned undecorated.

    Parameters
    ----------
    func : :obj:`callable`, optional
        Function to be decorated. Defaults to ``None``.
    description : :obj:`str`, optional
        Name used in the report, the function name if empty
    logger : :obj:`logging.Logger`, optional
        Logger receiving the report at INFO level. If not provided,
        the report is printed to stdout.
    """

    def decorator(f):
        name = description or f.__name__

        @functools.wraps(f)
        def wrapper(*args, **kwargs):
            region = BenchRegion(name, len(_active) + 1)
            if _active:
                _active[-1].events.append(region)
            _active.append(region)
            _sync()
            start = time.perf_counter()
            try:
                return f(*args, **kwargs)
            finally:
                _sync()
                region.elapsed = time.perf_counter() - start
                _active.pop()
                if not _active and _rank() == 0:
                    if logger:
                        logger.info(region.report())
                    else:
                        print(region.report())
        return wrapper

    if not ENABLE_BENCHMARK:
        return (lambda f: f) if func is None else func

    return decorator if func is None else decorator(func)
