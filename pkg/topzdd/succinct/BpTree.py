__all__ = ["BpTree"]

from typing import List, Optional, Sequence, Union

import numpy as np

from topzdd.succinct.Bitvector import Bitvector
from topzdd.succinct.PackedIntArray import PackedIntArray
from topzdd.utils.errors import ContainerFormatError

_INF = 1 << 62


def _byte_tables():
    exc, fmin = [0] * 256, [0] * 256
    for b in range(256):
        e, m = 0, 8
        for t in range(8):
            e += 1 if (b >> t) & 1 else -1
            m = min(m, e)
        exc[b], fmin[b] = e, m
    return exc, fmin


# excess change of a byte, minimum excess over its 1..8 bit prefixes
_EXC, _FMIN = _byte_tables()


class BpTree:
    r"""Ordinal tree in balanced-parentheses form.

    A tree with :math:`k` nodes is written as :math:`2k` parentheses in a
    depth-first traversal, an open parenthesis (bit 1) when a node is entered
    and a close parenthesis (bit 0) when it is left. A node is identified by
    the 1-based position of its open parenthesis, the root is node ``1``.

    Navigation reduces to forward/backward searches on the excess
    :math:`E(i) = \mathrm{rank}_1(i) - \mathrm{rank}_0(i)`, accelerated by a
    range min-excess directory: per block of ``block`` parentheses the total
    and minimum relative excess are stored, and a complete binary tree over
    the blocks answers "first/last block reaching an excess" queries in
    logarithmic time. Inside a block the scan proceeds byte by byte.

    Parameters
    ----------
    parens : :obj:`list` or :obj:`numpy.ndarray`
        Balanced 0/1 sequence (1 = open)
    block : :obj:`int`, optional
        Parentheses per directory block (multiple of 64)

    Attributes
    ----------
    size : :obj:`int`
        Number of parentheses
    nodes : :obj:`int`
        Number of tree nodes

    Raises
    ------
    ValueError
        If ``parens`` is not balanced.

    """

    def __init__(self, parens: Union[Sequence[int], np.ndarray], block: int = 256):
        if block <= 0 or block % 64 != 0:
            raise ValueError(f"block must be a positive multiple of 64, got {block}")
        bits = np.asarray(parens, dtype=np.int64).ravel()
        excess = np.cumsum(2 * bits - 1)
        if len(bits) % 2 or (len(bits) and (excess.min() < 0 or excess[-1] != 0)):
            raise ValueError("parentheses sequence is not balanced")
        if len(bits) and excess[:-1].min(initial=1) == 0:
            raise ValueError("parentheses sequence describes a forest, not a tree")
        leaves = np.zeros(len(bits), dtype=np.uint8)
        if len(bits):
            leaves[:-1] = (bits[:-1] == 1) & (bits[1:] == 0)
        starts = np.arange(0, len(bits), block)
        if len(bits):
            ends = np.minimum(starts + block, len(bits))
            prev = np.concatenate([[0], excess[starts[1:] - 1]])
            tot = excess[ends - 1] - prev
            mn = np.minimum.reduceat(excess, starts) - prev
        else:
            tot = mn = np.zeros(0, dtype=np.int64)
        self._init(Bitvector(bits), Bitvector(leaves), block,
                   [int(v) for v in mn], [int(v) for v in tot])

    def _init(self, bv: Bitvector, leaves: Bitvector, block: int,
              mn: List[int], tot: List[int]):
        self._bv = bv
        self._leaves = leaves
        self.block = block
        self.size = len(bv)
        self.nodes = self.size // 2
        self._w = [bv.word(t) for t in range(-(-self.size // 64))] + [0]
        self._bmn, self._btot = mn, tot
        nblocks = len(mn)
        self._leaf0 = 1 << max(0, (nblocks - 1).bit_length())
        self._mn = [_INF] * (2 * self._leaf0)
        self._tot = [0] * (2 * self._leaf0)
        self._mn[self._leaf0:self._leaf0 + nblocks] = mn
        self._tot[self._leaf0:self._leaf0 + nblocks] = tot
        for v in range(self._leaf0 - 1, 0, -1):
            left, right = 2 * v, 2 * v + 1
            self._tot[v] = self._tot[left] + self._tot[right]
            self._mn[v] = min(self._mn[left], self._tot[left] + self._mn[right])

    def __repr__(self) -> str:
        return f"<BpTree nodes={self.nodes}>"

    # bit-level helpers

    def _bit(self, p: int) -> int:
        p -= 1
        return (self._w[p >> 6] >> (p & 63)) & 1

    def _byte(self, p: int) -> int:
        # p - 1 is a multiple of 8
        p -= 1
        return (self._w[p >> 6] >> (p & 63)) & 0xFF

    def excess(self, i: int) -> int:
        return 2 * self._bv.rank1(i) - i

    def _scan_fwd(self, p: int, end: int, cur: int, target: int):
        # first position in [p, end] with excess <= target; cur = E(p - 1)
        while p <= end:
            if (p - 1) & 7 == 0 and p + 7 <= end:
                b = self._byte(p)
                if cur + _FMIN[b] > target:
                    cur += _EXC[b]
                    p += 8
                    continue
            cur += 1 if self._bit(p) else -1
            if cur <= target:
                return p, cur
            p += 1
        return None, cur

    def _scan_bwd(self, p: int, start: int, cur: int, target: int) -> Optional[int]:
        # last position in [start, p] with excess <= target; cur = E(p)
        while p >= start:
            if p & 7 == 0 and p - 7 >= start:
                b = self._byte(p - 7)
                if cur - _EXC[b] + _FMIN[b] > target:
                    cur -= _EXC[b]
                    p -= 8
                    continue
            if cur <= target:
                return p
            if p == 0:
                break
            cur -= 1 if self._bit(p) else -1
            p -= 1
        return None

    def _scan_min(self, p: int, end: int, cur: int) -> int:
        # minimum excess over [p, end]; cur = E(p - 1)
        best = _INF
        while p <= end:
            if (p - 1) & 7 == 0 and p + 7 <= end:
                b = self._byte(p)
                best = min(best, cur + _FMIN[b])
                cur += _EXC[b]
                p += 8
                continue
            cur += 1 if self._bit(p) else -1
            best = min(best, cur)
            p += 1
        return best

    def _block_end(self, b: int) -> int:
        return min((b + 1) * self.block, self.size)

    def fwdsearch(self, i: int, d: int) -> Optional[int]:
        """Smallest :math:`j > i` with :math:`E(j) \\le E(i) + d`, ``None`` if absent"""
        cur = self.excess(i)
        target = cur + d
        if i >= self.size:
            return None
        b = i // self.block
        j, cur = self._scan_fwd(i + 1, self._block_end(b), cur, target)
        if j is not None:
            return j
        node = self._leaf0 + b
        while node > 1:
            if node & 1 == 0:
                sib = node + 1
                if cur + self._mn[sib] <= target:
                    node = sib
                    break
                cur += self._tot[sib]
            node >>= 1
        else:
            return None
        while node < self._leaf0:
            left = 2 * node
            if cur + self._mn[left] <= target:
                node = left
            else:
                cur += self._tot[left]
                node = left + 1
        b = node - self._leaf0
        j, _ = self._scan_fwd(b * self.block + 1, self._block_end(b), cur, target)
        return j

    def bwdsearch(self, i: int, d: int) -> Optional[int]:
        """Largest :math:`0 \\le j < i` with :math:`E(j) \\le E(i) + d`, ``None`` if absent"""
        if i <= 0:
            return None
        target = self.excess(i) + d
        cur = self.excess(i - 1)
        if i - 1 == 0:
            return 0 if cur <= target else None
        b = (i - 2) // self.block
        j = self._scan_bwd(i - 1, b * self.block, cur, target)
        if j is not None:
            return j
        node = self._leaf0 + b
        base = self.excess(b * self.block)
        while node > 1:
            if node & 1:
                sib = node - 1
                sib_base = base - self._tot[sib]
                if sib_base + self._mn[sib] <= target:
                    node, base = sib, sib_base
                    break
                base = sib_base
            node >>= 1
        else:
            return 0 if target >= 0 else None
        while node < self._leaf0:
            left, right = 2 * node, 2 * node + 1
            right_base = base + self._tot[left]
            if right_base + self._mn[right] <= target:
                node, base = right, right_base
            else:
                node = left
        b = node - self._leaf0
        end = self._block_end(b)
        return self._scan_bwd(end, b * self.block + 1, base + self._tot[node], target)

    def _range_min(self, x: int, y: int) -> int:
        bx, by = (x - 1) // self.block, (y - 1) // self.block
        if bx == by:
            return self._scan_min(x, y, self.excess(x - 1))
        best = self._scan_min(x, self._block_end(bx), self.excess(x - 1))
        best = min(best, self._scan_min(by * self.block + 1, y, self.excess(by * self.block)))
        lo, hi = bx + 1 + self._leaf0, by + self._leaf0
        nodes = []
        while lo < hi:
            if lo & 1:
                nodes.append(lo)
                lo += 1
            if hi & 1:
                hi -= 1
                nodes.append(hi)
            lo >>= 1
            hi >>= 1
        for node in nodes:
            shift = self._leaf0.bit_length() - node.bit_length()
            first = (node << shift) - self._leaf0
            best = min(best, self.excess(first * self.block) + self._mn[node])
        return best

    # tree navigation

    def _check(self, x: int):
        if not 1 <= x <= self.size or not self._bit(x):
            raise IndexError(f"{x} is not a node of this tree")

    def close(self, x: int) -> int:
        return self.fwdsearch(x, -1)

    def open(self, y: int) -> int:
        return self.bwdsearch(y, 0) + 1

    def isleaf(self, x: int) -> bool:
        self._check(x)
        return self._bit(x + 1) == 0

    def parent(self, x: int) -> Optional[int]:
        self._check(x)
        if x == 1:
            return None
        return self.bwdsearch(x, -2) + 1

    def firstchild(self, x: int) -> Optional[int]:
        return None if self.isleaf(x) else x + 1

    def lastchild(self, x: int) -> Optional[int]:
        if self.isleaf(x):
            return None
        return self.open(self.close(x) - 1)

    def nextsibling(self, x: int) -> Optional[int]:
        self._check(x)
        y = self.close(x) + 1
        return y if y <= self.size and self._bit(y) else None

    def prevsibling(self, x: int) -> Optional[int]:
        self._check(x)
        if x > 1 and not self._bit(x - 1):
            return self.open(x - 1)
        return None

    def preorder_rank(self, x: int) -> int:
        return self._bv.rank1(x)

    def preorder_select(self, k: int) -> int:
        return self._bv.select1(k)

    def leaf_rank(self, x: int) -> int:
        """Number of leaves whose open parenthesis is at or before ``x``"""
        return self._leaves.rank1(x)

    def leaf_select(self, j: int) -> int:
        return self._leaves.select1(j)

    @property
    def leaf_count(self) -> int:
        return self._leaves.ones

    def depth(self, x: int) -> int:
        self._check(x)
        return self.excess(x) - 1

    def subtreesize(self, x: int) -> int:
        self._check(x)
        return (self.close(x) - x + 1) // 2

    def leftmost_leaf(self, x: int) -> int:
        self._check(x)
        return self.leaf_select(self.leaf_rank(x - 1) + 1)

    def rightmost_leaf(self, x: int) -> int:
        self._check(x)
        return self.leaf_select(self.leaf_rank(self.close(x)))

    def lca(self, x: int, y: int) -> int:
        self._check(x)
        self._check(y)
        if x > y:
            x, y = y, x
        if x == y or y < self.close(x):
            return x
        mu = self._range_min(x, y)
        return self.bwdsearch(x, mu - 1 - self.excess(x)) + 1

    def children(self, x: int) -> List[int]:
        out = []
        c = self.firstchild(x)
        while c is not None:
            out.append(c)
            c = self.nextsibling(c)
        return out

    def query(self, op: str, *args):
        """Dispatch a navigation operation by name (``"parent"``, ``"depth"``, ...)"""
        if op not in _OPS:
            raise ValueError(f"unknown tree operation {op!r}")
        return getattr(self, op)(*args)

    # serialization

    def to_words(self) -> np.ndarray:
        """Serialized form: header with section lengths, parentheses, leaf
        markers and the per-block min/total excess (offset by ``block``)."""
        sections = [
            self._bv.to_words(),
            self._leaves.to_words(),
            PackedIntArray([v + self.block for v in self._bmn]).to_words(),
            PackedIntArray([v + self.block for v in self._btot]).to_words(),
        ]
        header = np.array([self.size, self.block] + [len(s) for s in sections], dtype=np.uint64)
        return np.concatenate([header] + sections).astype(np.uint64)

    @classmethod
    def from_words(cls, words: np.ndarray) -> "BpTree":
        words = np.asarray(words, dtype=np.uint64)
        if len(words) < 6:
            raise ContainerFormatError("tree record too short")
        size, block = int(words[0]), int(words[1])
        lengths = [int(w) for w in words[2:6]]
        if len(words) != 6 + sum(lengths):
            raise ContainerFormatError("tree record has wrong length")
        offsets = np.cumsum([6] + lengths)
        parts = [words[offsets[t]:offsets[t + 1]] for t in range(4)]
        bv, leaves = Bitvector.from_words(parts[0]), Bitvector.from_words(parts[1])
        if len(bv) != size:
            raise ContainerFormatError("tree record size mismatch")
        mn = [v - block for v in PackedIntArray.from_words(parts[2])]
        tot = [v - block for v in PackedIntArray.from_words(parts[3])]
        obj = cls.__new__(cls)
        obj._init(bv, leaves, block, mn, tot)
        return obj

    def size_in_bits(self) -> int:
        return 64 * len(self.to_words())


_OPS = (
    "parent", "firstchild", "lastchild", "nextsibling", "prevsibling", "isleaf",
    "preorder_rank", "preorder_select", "leaf_rank", "leaf_select", "depth",
    "subtreesize", "leftmost_leaf", "rightmost_leaf", "lca",
)
