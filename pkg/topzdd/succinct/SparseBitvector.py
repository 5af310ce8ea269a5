__all__ = ["SparseBitvector"]

from typing import Sequence, Union

import numpy as np

from topzdd.succinct.Bitvector import Bitvector
from topzdd.succinct.PackedIntArray import PackedIntArray
from topzdd.utils.errors import ContainerFormatError

KIND_SPARSE = 1
KIND_FLIPPED = 2


class SparseBitvector:
    r"""Elias-Fano encoded bitvector.

    The positions :math:`p_1 < \dots < p_m` of the ones are split into
    :math:`L = \lfloor\log_2(n/m)\rfloor` low bits, stored verbatim in a
    :class:`topzdd.succinct.PackedIntArray`, and high parts, stored in unary
    inside a plain :class:`topzdd.succinct.Bitvector` of length
    :math:`m + \lceil n / 2^L \rceil`.

    With ``flipped=True`` the structure encodes the positions of the zeros
    instead, which is the representation of choice for dense bitvectors.

    Parameters
    ----------
    bits : :obj:`numpy.ndarray` or :obj:`list`
        Sequence of 0/1 values, ``bits[0]`` is :math:`B[1]`
    flipped : :obj:`bool`, optional
        Encode zeros rather than ones

    Notes
    -----
    ``select1`` (``select0`` when flipped) runs one select on the high part.
    ``rank`` and the complementary select are logarithmic.

    """

    def __init__(self, bits: Union[Sequence[int], np.ndarray], flipped: bool = False):
        bits = np.asarray(bits, dtype=np.uint8).ravel()
        if bits.size and bits.max() > 1:
            raise ValueError("bits must be 0/1 values")
        target = 0 if flipped else 1
        positions = np.flatnonzero(bits == target)
        self._build(len(bits), positions, flipped)

    def _build(self, n: int, positions: np.ndarray, flipped: bool):
        m = len(positions)
        low_bits = max(0, (max(n, 1) // max(m, 1)).bit_length() - 1)
        positions = np.asarray(positions, dtype=np.int64)
        high = positions >> low_bits
        upper = np.zeros(m + ((max(n, 1) - 1) >> low_bits) + 1, dtype=np.uint8)
        upper[high + np.arange(m)] = 1
        low = (positions & ((1 << low_bits) - 1)) if low_bits else np.zeros(0, dtype=np.int64)
        self._init(n, m, low_bits, flipped, Bitvector(upper),
                   PackedIntArray(low, width=max(low_bits, 1)))

    def _init(self, n, m, low_bits, flipped, upper, low):
        self.n = n
        self._m = m
        self.low_bits = low_bits
        self.flipped = flipped
        self._upper = upper
        self._low = low

    @property
    def kind(self) -> str:
        return "flipped" if self.flipped else "sparse"

    @property
    def ones(self) -> int:
        return self.n - self._m if self.flipped else self._m

    @property
    def zeros(self) -> int:
        return self.n - self.ones

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"<SparseBitvector n={self.n} ones={self.ones} kind={self.kind}>"

    # stored positions (ones, or zeros when flipped)

    def _position(self, j: int) -> int:
        # 1-based position of the j-th stored element
        high = self._upper.select1(j) - j
        low = self._low[j - 1] if self.low_bits else 0
        return ((high << self.low_bits) | low) + 1

    def _rank_stored(self, i: int) -> int:
        # number of stored positions <= i
        if i <= 0 or self._m == 0:
            return 0
        v = i - 1
        hv = v >> self.low_bits
        lv = v & ((1 << self.low_bits) - 1)
        nxt = 0 if hv == 0 else self._upper.select0(hv)
        k = nxt - hv
        while nxt < len(self._upper) and self._upper.access(nxt + 1) == 1:
            low = self._low[k] if self.low_bits else 0
            if low > lv:
                break
            k += 1
            nxt += 1
        return k

    def _select_other(self, j: int) -> int:
        # j-th position not stored: largest k with p_k - k < j, then j + k
        lo, hi = 0, self._m
        while lo < hi:
            mid = (lo + hi + 1) // 2
            if self._position(mid) - mid < j:
                lo = mid
            else:
                hi = mid - 1
        return j + lo

    @property
    def bits(self) -> np.ndarray:
        stored = np.zeros(self.n, dtype=np.uint8)
        for j in range(1, self._m + 1):
            stored[self._position(j) - 1] = 1
        return 1 - stored if self.flipped else stored

    def access(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexError(f"position {i} outside [1, {self.n}]")
        hit = self._rank_stored(i) - self._rank_stored(i - 1)
        return 1 - hit if self.flipped else hit

    __getitem__ = access

    def rank1(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise IndexError(f"rank position {i} outside [0, {self.n}]")
        r = self._rank_stored(i)
        return i - r if self.flipped else r

    def rank0(self, i: int) -> int:
        return i - self.rank1(i)

    def rank(self, i: int, c: int = 1) -> int:
        return self.rank1(i) if c else self.rank0(i)

    def select(self, j: int, c: int = 1) -> int:
        total = self.ones if c else self.zeros
        if not 1 <= j <= total:
            raise ValueError(f"select_{c}({j}) not found, only {total} {c}-bits")
        if bool(c) != self.flipped:
            return self._position(j)
        return self._select_other(j)

    def select1(self, j: int) -> int:
        return self.select(j, 1)

    def select0(self, j: int) -> int:
        return self.select(j, 0)

    def to_words(self) -> np.ndarray:
        """Serialized form: kind, n, m, L, high-part bitvector data and
        directory, low-part words."""
        header = np.array([KIND_FLIPPED if self.flipped else KIND_SPARSE,
                           self.n, self._m, self.low_bits], dtype=np.uint64)
        upper = self._upper.to_words()[3:]
        low = self._low.to_words()[2:]
        return np.concatenate([header, upper, low]).astype(np.uint64)

    @classmethod
    def from_words(cls, words: np.ndarray) -> "SparseBitvector":
        words = np.asarray(words, dtype=np.uint64)
        if len(words) < 4 or int(words[0]) not in (KIND_SPARSE, KIND_FLIPPED):
            raise ContainerFormatError("not a sparse bitvector record")
        n, m, low_bits = (int(w) for w in words[1:4])
        ulen = m + ((max(n, 1) - 1) >> low_bits) + 1
        unwords = -(-ulen // 64)
        undir = unwords // 8 + 1
        lnwords = -(-m * low_bits // 64)
        if len(words) != 4 + unwords + undir + lnwords:
            raise ContainerFormatError("sparse bitvector record has wrong length")
        upper = Bitvector.from_words(np.concatenate([
            np.array([0, ulen, 512], dtype=np.uint64), words[4:4 + unwords + undir]]))
        if low_bits:
            low = PackedIntArray.from_words(np.concatenate([
                np.array([m, low_bits], dtype=np.uint64), words[4 + unwords + undir:]]))
        else:
            low = PackedIntArray([], width=1)
        obj = cls.__new__(cls)
        obj._init(n, m, low_bits, int(words[0]) == KIND_FLIPPED, upper, low)
        return obj

    def size_in_bits(self) -> int:
        return 64 * len(self.to_words())

