r"""
Benchmark Utility in topzdd
===========================
This tutorial demonstrates how to time the compression of a ZDD and the
navigation of its compressed form.

:py:func:`topzdd.utils.benchmark` is a decorator used to decorate any
function to measure its execution time from start to finish, and
:py:func:`topzdd.utils.mark` is a function used inside the benchmark-decorated
function to provide fine-grain time measurements.
:py:func:`topzdd.compress_zdd` is itself decorated, with one mark per build
stage. The printout is only produced when ``TZDD_BENCH=1`` is exported.
"""

import logging
import os
import sys

os.environ["TZDD_BENCH"] = "1"

from topzdd import FamilySpec, compress_zdd
from topzdd.query import traverse
from topzdd.utils import run_suite
from topzdd.utils.benchmark import benchmark, mark

logging.basicConfig(level=logging.INFO, stream=sys.stdout,
                    format="%(name)s: %(message)s")

###############################################################################
# Let's start by timing the compression of a knapsack family. Since
# :py:func:`topzdd.compress_zdd` is decorated, each stage of the build is
# reported on the ``topzdd.build`` logger.
spec = FamilySpec.parse("knapsack:A=100,W=100,C=500,seed=7")
store, root = spec.build()
tz, info = compress_zdd(store, root, family=str(spec))

###############################################################################
# The same stage timings are available as a dictionary
print(info.timings)

###############################################################################
# Benchmarked functions can be nested; the marks of each level are indented
# in the printout.


@benchmark(description="build and compress")
def build_and_compress(text):
    mark("Begin build")
    store, root = FamilySpec.parse(text).build()
    mark("Begin compression")
    tz, _ = compress_zdd(store, root, family=text)
    mark("Finish compression")
    return store, root, tz


store, root, tz = build_and_compress("nqueens:n=7")

###############################################################################
# Navigation is benchmarked by random traversals: each step follows the 0- or
# 1-edge with equal probability, restarting at the root after a terminal.
# Using the same seed on the compressed form and on the store visits exactly
# the same nodes.
compressed = traverse(tz, steps=4096, seed=0)
plain = traverse(store, steps=4096, seed=0, root=root)
print(f"topzdd: {compressed.us_per_step:.2f} us/step, zdd: {plain.us_per_step:.2f} us/step")

###############################################################################
# Finally, a few families of the desk-scale suite. Run the full suite with
# ``mpiexec -n 4 topzdd suite`` to deal the families over several processes.
for record in run_suite(["powerset:A=64", "bounded_card:A=30,B=6"], probes=100):
    print(record["family"], record["naive_bytes"], record["topzdd_bytes"],
          record["height"], record["max_depth"], record["verified"])
