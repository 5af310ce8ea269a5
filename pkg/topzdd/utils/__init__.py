"""
Utilities
=========

The subpackage utils collects the ambient pieces shared by the rest of the
library: optional dependencies, exceptions, the container format, timing
helpers and the end-to-end checks used by tests and by the command line.

A list of utilities present in topzdd.utils:
    deps                              Optional dependencies and env flags
    errors                            Exceptions raised by the library
    benchmark                         Timing decorator with nested marks
    node_checked                      Validation of node preorders
    pack_container                    Serialize header and components
    unpack_container                  Parse and check a container
    zddtest                           Compare a compressed and a plain ZDD
    run_suite                         Build and verify the acceptance suite

"""

# isort: skip_file

from .errors import *
from .deps import *
from .benchmark import *
from .decorators import *
from .container import *
from .zddtest import *
from .suite import *
