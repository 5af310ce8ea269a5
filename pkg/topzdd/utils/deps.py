__all__ = [
    "mpi_enabled",
    "log_level",
]

import logging
import os
from importlib import util
from typing import Optional


# error message at import of available package
def mpi4py_import(message: Optional[str] = None) -> Optional[str]:
    mpi_test = (
        # detect if mpi4py is available and the user is expecting it to be used
        util.find_spec("mpi4py") is not None and int(os.getenv("TZDD_MPI", 1)) == 1
    )
    if mpi_test:
        try:
            from mpi4py import MPI  # noqa: F401
            mpi_message = None
        except Exception as e:
            # installed but the MPI runtime cannot be loaded
            mpi_message = f"Failed to import mpi4py (error:{e}), falling back to serial execution."
    else:
        mpi_message = (
            "mpi4py package not installed or os.getenv('TZDD_MPI') == 0. "
            f"In order to be able to use {message} "
            'run "pip install mpi4py" or "conda install -c conda-forge mpi4py".'
        )
    return mpi_message


def _parse_level(value: str) -> int:
    if value.isdigit():
        return int(value)
    level = logging.getLevelName(value.upper())
    return level if isinstance(level, int) else logging.WARNING


mpi_enabled: bool = mpi4py_import() is None

log_level: int = _parse_level(os.getenv("TZDD_LOG", "WARNING"))
