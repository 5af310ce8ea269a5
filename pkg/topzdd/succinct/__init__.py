"""
Succinct Data Structures
========================

The subpackage succinct provides the static building blocks every
compressed ZDD component is made of. All structures are immutable after
construction, use 1-based positions and report their serialized size
through ``size_in_bits``.

A list of structures present in topzdd.succinct:
    Bitvector                         Plain rank/select bitvector
    SparseBitvector                   Elias-Fano bitvector (optionally flipped)
    PackedIntArray                    Fixed-width integer array
    BpTree                            Balanced-parentheses ordinal tree
    bv_auto                           Density-driven bitvector selection
    bv_from_words                     Deserialize any bitvector

"""

from .Bitvector import *
from .SparseBitvector import *
from .PackedIntArray import *
from .BpTree import *
from .auto import *

__all__ = [
    "Bitvector",
    "SparseBitvector",
    "PackedIntArray",
    "BpTree",
    "bv_auto",
    "bv_from_words",
]
