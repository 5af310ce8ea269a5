"""
Navigation
==========

The subpackage query answers questions on a compressed ZDD without
decompressing it: cluster sizes of the vertices of :math:`T'`, the label
and the two children of a node given by its preorder, membership of a set,
and a full decompression used as reference.

A list of queries present in topzdd.query:
    cluster_size                      Size of the cluster of a T' vertex
    label                             Element label of a node
    child                             Target of the 0- or 1-edge of a node
    member_compressed                 Membership walk on the compressed form
    traverse                          Random 0/1 walk (benchmark driver)
    decompress_all                    Every node's (label, zero, one)
    decompress_clusters               Nodes of every T' vertex cluster

"""

from .navigation import *
from .decompress import *

__all__ = [
    "ClusterCursor",
    "TraverseResult",
    "cluster_size",
    "label",
    "child",
    "member_compressed",
    "traverse",
    "decompress_all",
    "decompress_clusters",
]
