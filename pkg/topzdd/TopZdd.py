__all__ = [
    "TopZdd",
    "COMPONENTS",
]

import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import numpy as np

from topzdd.ZddStore import PreorderEdge, Terminal
from topzdd.query import decompress, navigation
from topzdd.succinct import BpTree, PackedIntArray, bv_from_words
from topzdd.utils.container import (
    FIXED_HEADER_BYTES,
    FLAG_DEGENERATE,
    FLAG_ROOT_TOP,
    pack_container,
    unpack_container,
)
from topzdd.utils.decorators import node_checked
from topzdd.utils.errors import ContainerFormatError

logger = logging.getLogger(__name__)

# component name and kind, in container order
COMPONENTS = (
    ("bp", "tree"),
    ("B_dummy", "bits"),
    ("clsize", "ints"),
    ("label_span", "ints"),
    ("type_span", "bits"),
    ("B_H", "bits"),
    ("preorder_diff", "ints"),
    ("label_diff", "ints"),
    ("B_src_root", "bits"),
    ("dst_root", "ints"),
    ("type_root", "bits"),
    ("B_edge", "bits"),
    ("src_in", "ints"),
    ("dst_in", "ints"),
    ("type_in", "bits"),
    ("dst_dummy", "ints"),
)

_READERS = {
    "tree": BpTree.from_words,
    "bits": bv_from_words,
    "ints": PackedIntArray.from_words,
}


class TopZdd:
    r"""Compressed ZDD navigable without decompression.

    A ZDD with ``n`` branching nodes, named by their depth-first preorder,
    is stored as the balanced-parentheses tree :math:`T'` of its top DAG
    together with the per-vertex arrays of merge information and the
    complement edges kept in cluster bags or at the root:

    ================= ========================================================
    ``bp``            :math:`T'` in balanced-parentheses form
    ``B_dummy``       per leaf of :math:`T'`, 1 for dummy leaves
    ``clsize``        cumulative cluster sizes of the dummy leaves
    ``label_span``    label difference of every non-dummy leaf edge
    ``type_span``     type of every non-dummy leaf edge
    ``B_H``           per internal vertex, 1 for horizontal merges
    ``preorder_diff`` local preorder of the shared node of vertical merges
    ``label_diff``    label difference of that node to the top boundary
    ``B_src_root``    unary count of root edges per source node
    ``dst_root``      root edge targets (``n + 1``/``n + 2`` for terminals)
    ``type_root``     root edge types
    ``B_edge``        unary count of bag edges per vertex of :math:`T'`
    ``src_in``        local source of every bag edge
    ``dst_in``        encoded local target (0, 1 terminals, ``k + 1`` node k)
    ``type_in``       bag edge types
    ``dst_dummy``     non-dummy preorder referenced by every dummy
    ================= ========================================================

    Parameters
    ----------
    n : :obj:`int`
        Number of branching nodes
    c : :obj:`int`
        Universe size
    root_label : :obj:`int`
        Label of the root (``c + 1`` for a terminal-only family)
    components : :obj:`dict`
        Structures keyed by component name
    root_terminal : :obj:`topzdd.Terminal`, optional
        Family of a terminal-only ZDD (``n = 0``)
    family : :obj:`str`, optional
        Description of the source family, stored as metadata

    """

    def __init__(self, n: int, c: int, root_label: int,
                 components: Dict[str, object],
                 root_terminal: Optional[Terminal] = None,
                 family: str = ""):
        missing = [name for name, _ in COMPONENTS if name not in components]
        if missing:
            raise ValueError(f"missing components {missing}")
        self.n = n
        self.c = c
        self.root_label = root_label
        self.root_terminal = root_terminal
        self.family = family
        self.components = {name: components[name] for name, _ in COMPONENTS}
        for name, value in self.components.items():
            setattr(self, name, value)

    def __repr__(self) -> str:
        return (f"<TopZdd n={self.n} c={self.c} vertices={self.n_vertices} "
                f"bytes={self.size_in_bytes()}>")

    @property
    def degenerate(self) -> bool:
        """No spanning-tree edge: zero or one branching node"""
        return self.n <= 1

    @property
    def n_vertices(self) -> int:
        """Number of vertices of :math:`T'`, dummies included"""
        return self.bp.nodes

    @property
    def n_dummies(self) -> int:
        return self.B_dummy.ones

    def clsize_at(self, d: int) -> int:
        """Cumulative size of the first ``d`` dummy clusters"""
        return self.clsize[d - 1] if d else 0

    # queries

    @node_checked
    def label(self, x: int, return_depth: bool = False):
        return navigation.label(self, x, return_depth=return_depth)

    @node_checked
    def zero(self, x: int, return_depth: bool = False):
        return navigation.child(self, x, 0, return_depth=return_depth)

    @node_checked
    def one(self, x: int, return_depth: bool = False):
        return navigation.child(self, x, 1, return_depth=return_depth)

    def member(self, s: Sequence[int]) -> bool:
        s = list(s)
        if s != sorted(set(s)):
            raise ValueError("set must be given as strictly ascending elements")
        return navigation.member_compressed(self, s)

    def cluster_size(self, p: int) -> int:
        return navigation.cluster_size(self, p)

    def decompress_all(self) -> List[PreorderEdge]:
        return decompress.decompress_all(self)

    def traverse(self, steps: int = 65536, seed: Optional[int] = None,
                 record: bool = False) -> navigation.TraverseResult:
        return navigation.traverse(self, steps=steps, seed=seed, record=record)

    # sizes

    def component_bytes(self) -> Dict[str, int]:
        return {name: -(-value.size_in_bits() // 8) for name, value in self.components.items()}

    def payload_bytes(self) -> int:
        return sum(self.component_bytes().values())

    def size_in_bits(self) -> int:
        return sum(value.size_in_bits() for value in self.components.values())

    def size_in_bytes(self) -> int:
        """Payload plus the fixed container header, metadata excluded"""
        return self.payload_bytes() + FIXED_HEADER_BYTES

    # serialization

    @property
    def flags(self) -> int:
        flags = FLAG_DEGENERATE if self.degenerate else 0
        if self.root_terminal is Terminal.TOP:
            flags |= FLAG_ROOT_TOP
        return flags

    def to_bytes(self) -> bytes:
        return pack_container(self.n, self.c, self.root_label, self.flags, self.family,
                              [value.to_words() for value in self.components.values()])

    @classmethod
    def from_bytes(cls, data: bytes) -> "TopZdd":
        header, family, words = unpack_container(data)
        components = {}
        for (name, kind), record in zip(COMPONENTS, words):
            components[name] = _READERS[kind](record)
        n, flags = header["n"], header["flags"]
        if bool(flags & FLAG_DEGENERATE) != (n <= 1):
            raise ContainerFormatError(f"degenerate flag inconsistent with n={n}")
        root_terminal = None
        if n == 0:
            root_terminal = Terminal.TOP if flags & FLAG_ROOT_TOP else Terminal.BOT
        return cls(n, header["c"], header["root_label"], components,
                   root_terminal=root_terminal, family=family)

    def save(self, path: Union[str, Path]) -> int:
        data = self.to_bytes()
        Path(path).write_bytes(data)
        logger.info("wrote %s (%d bytes)", path, len(data))
        return len(data)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "TopZdd":
        return cls.from_bytes(Path(path).read_bytes())

    def audit(self) -> bool:
        """Check the length identities between components.

        Raises
        ------
        AssertionError
            On the first violated identity.

        """
        bp = self.bp
        leaves = bp.leaf_count
        checks = [
            (len(self.B_dummy) == leaves, "B_dummy covers every leaf of T'"),
            (self.B_dummy.ones == len(self.clsize) == len(self.dst_dummy),
             "one clsize and dst_dummy entry per dummy"),
            (len(self.label_span) == len(self.type_span) == self.B_dummy.zeros,
             "one label_span and type_span entry per non-dummy leaf"),
            (len(self.B_H) == bp.nodes - leaves, "B_H covers every internal vertex"),
            (len(self.preorder_diff) == len(self.label_diff) == self.B_H.zeros,
             "one preorder_diff and label_diff entry per vertical merge"),
            (all(a <= b for a, b in zip(self.clsize, list(self.clsize)[1:])),
             "clsize is nondecreasing"),
            (self.B_src_root.zeros == self.n, "B_src_root has one group per node"),
            (self.B_src_root.ones == len(self.dst_root) == len(self.type_root),
             "one dst_root and type_root entry per root edge"),
            (self.B_edge.zeros == bp.nodes, "B_edge has one group per vertex of T'"),
            (self.B_edge.ones == len(self.src_in) == len(self.dst_in) == len(self.type_in),
             "one src_in, dst_in and type_in entry per bag edge"),
            (self.degenerate == (bp.nodes == 0), "T' is empty exactly for degenerate inputs"),
        ]
        for ok, what in checks:
            if not ok:
                raise AssertionError(f"component audit failed: {what}")
        return True
