__all__ = [
    "Bitvector",
    "popcount",
    "select_in_word",
]

from typing import Sequence, Union

import numpy as np

from topzdd.utils.errors import ContainerFormatError

KIND_PLAIN = 0
_MASK64 = (1 << 64) - 1


def popcount(x: int) -> int:
    """Number of set bits of a non-negative Python integer"""
    return x.bit_count()


def select_in_word(x: int, j: int) -> int:
    """0-based offset of the ``j``-th (1-based) set bit of ``x``"""
    for _ in range(j - 1):
        x &= x - 1
    return (x & -x).bit_length() - 1


def pack_bits(bits: np.ndarray) -> np.ndarray:
    """Pack a 0/1 array into little-endian ``uint64`` words (bit ``i`` of the
    input is bit ``i % 64`` of word ``i // 64``)."""
    nbytes = -(-len(bits) // 64) * 8
    packed = np.packbits(bits.astype(np.uint8), bitorder="little")
    buf = np.zeros(nbytes, dtype=np.uint8)
    buf[:len(packed)] = packed
    return buf.view("<u8").astype(np.uint64)


def unpack_bits(words: np.ndarray, n: int) -> np.ndarray:
    raw = np.asarray(words, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n]


class Bitvector:
    r"""Plain rank/select bitvector.

    Static bit sequence :math:`B[1..n]` with a one-level rank directory:
    the number of ones before every superblock of ``superblock`` bits is
    stored explicitly, the remainder of a rank query is obtained by
    popcounting at most ``superblock / 64`` words. Select binary-searches
    the directory and scans the selected superblock.

    Parameters
    ----------
    bits : :obj:`numpy.ndarray` or :obj:`list`
        Sequence of 0/1 values, ``bits[0]`` is :math:`B[1]`
    superblock : :obj:`int`, optional
        Bits per directory entry (multiple of 64)

    Attributes
    ----------
    n : :obj:`int`
        Number of bits
    ones : :obj:`int`
        Number of set bits
    kind : :obj:`str`
        ``"plain"``

    Notes
    -----
    All indices are 1-based and ``rank(0) = 0``. Out-of-range positions raise
    :class:`IndexError`, a select beyond the number of ``c`` bits raises
    :class:`ValueError`.

    """
    kind = "plain"

    def __init__(self, bits: Union[Sequence[int], np.ndarray], superblock: int = 512):
        if superblock <= 0 or superblock % 64 != 0:
            raise ValueError(f"superblock must be a positive multiple of 64, got {superblock}")
        bits = np.asarray(bits, dtype=np.uint8).ravel()
        if bits.size and bits.max() > 1:
            raise ValueError("bits must be 0/1 values")
        self._init_words(pack_bits(bits), len(bits), superblock)

    def _init_words(self, words: np.ndarray, n: int, superblock: int,
                    directory: np.ndarray = None):
        self.n = n
        self.superblock = superblock
        self._wps = superblock // 64
        self._words = np.asarray(words, dtype=np.uint64)
        self._w = [int(w) for w in self._words]
        if directory is None:
            counts = np.array([popcount(w) for w in self._w], dtype=np.int64)
            cum = np.concatenate([[0], np.cumsum(counts)])
            directory = cum[::self._wps].astype(np.uint64)
        self._directory = np.asarray(directory, dtype=np.uint64)
        self._super = [int(c) for c in self._directory]
        self.ones = self._count_ones(len(self._w))

    def _count_ones(self, nwords: int) -> int:
        sb = nwords // self._wps
        count = self._super[sb]
        for t in range(sb * self._wps, nwords):
            count += popcount(self._w[t])
        return count

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} n={self.n} ones={self.ones}>"

    @property
    def zeros(self) -> int:
        return self.n - self.ones

    @property
    def bits(self) -> np.ndarray:
        """Decoded 0/1 content as a ``uint8`` array"""
        return unpack_bits(self._words, self.n)

    def word(self, t: int) -> int:
        """Raw 64-bit word ``t`` (0-based) as Python integer"""
        return self._w[t]

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        i -= 1
        return (self._w[i >> 6] >> (i & 63)) & 1

    __getitem__ = access

    def rank1(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise IndexError(f"rank position {i} outside [0, {self.n}]")
        fw, rem = i >> 6, i & 63
        count = self._count_ones(fw)
        if rem:
            count += popcount(self._w[fw] & ((1 << rem) - 1))
        return count

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, i: int, c: int = 1) -> int:
        return self.rank1(i) if c else self.rank0(i)

    def _super_count(self, sb: int, c: int) -> int:
        # number of c-bits before superblock sb
        if c:
            return self._super[sb]
        return min(sb * self.superblock, self.n) - self._super[sb]

    def select(self, j: int, c: int = 1) -> int:
        total = self.ones if c else self.zeros
        if not 1 <= j <= total:
            raise ValueError(f"select_{c}({j}) not found, only {total} {c}-bits")
        lo, hi = 0, len(self._super) - 1
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._super_count(mid, c) < j:
                lo = mid
            else:
                hi = mid - 1
        count = self._super_count(lo, c)
        for t in range(lo * self._wps, len(self._w)):
            x = self._w[t] if c else (~self._w[t]) & _MASK64
            pc = popcount(x)
            if count + pc >= j:
                return t * 64 + select_in_word(x, j - count) + 1
            count += pc
        raise RuntimeError("rank directory inconsistent with stored words")

    def select1(self, j: int) -> int:
        return self.select(j, 1)

    def select0(self, j: int) -> int:
        return self.select(j, 0)

    def to_words(self) -> np.ndarray:
        """Serialized form: kind, n, superblock, data words, directory."""
        header = np.array([KIND_PLAIN, self.n, self.superblock], dtype=np.uint64)
        return np.concatenate([header, self._words, self._directory]).astype(np.uint64)

    @classmethod
    def from_words(cls, words: np.ndarray) -> "Bitvector":
        words = np.asarray(words, dtype=np.uint64)
        if len(words) < 3 or int(words[0]) != KIND_PLAIN:
            raise ContainerFormatError("not a plain bitvector record")
        n, superblock = int(words[1]), int(words[2])
        nwords = -(-n // 64)
        ndir = nwords // (superblock // 64) + 1
        if len(words) != 3 + nwords + ndir:
            raise ContainerFormatError("plain bitvector record has wrong length")
        obj = cls.__new__(cls)
        obj._init_words(words[3:3 + nwords], n, superblock, words[3 + nwords:])
        return obj

    def size_in_bits(self) -> int:
        return 64 * (3 + len(self._w) + len(self._super))
