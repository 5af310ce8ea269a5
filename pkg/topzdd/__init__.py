# isort: skip_file

from . import utils
from .utils.errors import *
from .ZddStore import (
    ZddStore,
    Terminal,
    PreorderEdge,
    BOT,
    TOP,
    read_family,
    write_family,
    naive_bytes,
)
from .TopZdd import TopZdd
from . import (
    build,
    families,
    query,
    succinct,
)
from .build import compress_zdd, BuildInfo
from .families import FamilySpec

try:
    from .version import version as __version__
except ImportError:
    # Not installed, so the version is unknown. This case *should* be rare:
    # topzdd should be installed properly!
    from datetime import datetime

    __version__ = "unknown-" + datetime.today().strftime("%Y%m%d")
