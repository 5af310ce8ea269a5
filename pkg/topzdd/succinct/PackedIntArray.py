__all__ = ["PackedIntArray"]

from typing import Iterator, List, Optional, Sequence, Union

import numpy as np

from topzdd.succinct.Bitvector import pack_bits
from topzdd.utils.errors import ContainerFormatError


class PackedIntArray:
    r"""Fixed-width array of non-negative integers.

    Every entry uses :math:`\lfloor\log_2 m\rfloor + 1` bits where :math:`m`
    is the largest stored value (one bit when :math:`m = 0`), so that
    :math:`m` itself remains representable.

    Parameters
    ----------
    values : :obj:`list` or :obj:`numpy.ndarray`
        Non-negative integers below :math:`2^{63}`
    width : :obj:`int`, optional
        Force a wider entry than the largest value requires

    Attributes
    ----------
    width : :obj:`int`
        Bits per entry

    """

    def __init__(self, values: Union[Sequence[int], np.ndarray],
                 width: Optional[int] = None):
        values = [int(v) for v in values]
        if any(v < 0 for v in values):
            raise ValueError("PackedIntArray stores non-negative integers only")
        m = max(values, default=0)
        if m >= 1 << 63:
            raise OverflowError(f"value {m} does not fit in 63 bits")
        needed = max(1, m.bit_length())
        if width is None:
            width = needed
        elif not needed <= width <= 63:
            raise ValueError(f"width {width} cannot hold values up to {m}")
        self._init(len(values), width, self._pack(values, width))

    @staticmethod
    def _pack(values: List[int], width: int) -> np.ndarray:
        if not values:
            return np.zeros(0, dtype=np.uint64)
        arr = np.asarray(values, dtype=np.uint64)
        shifts = np.arange(width, dtype=np.uint64)
        bits = ((arr[:, None] >> shifts) & np.uint64(1)).astype(np.uint8).ravel()
        return pack_bits(bits)

    def _init(self, length: int, width: int, words: np.ndarray):
        self.length = length
        self.width = width
        self._words = np.asarray(words, dtype=np.uint64)
        # trailing zero word for reads straddling the last boundary
        self._w = [int(w) for w in self._words] + [0]
        self._mask = (1 << width) - 1

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} outside [0, {self.length})")
        start = i * self.width
        t, off = start >> 6, start & 63
        x = self._w[t] >> off
        if off + self.width > 64:
            x |= self._w[t + 1] << (64 - off)
        return x & self._mask

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield self[i]

    def __repr__(self) -> str:
        return f"<PackedIntArray length={self.length} width={self.width}>"

    def tolist(self) -> List[int]:
        return list(self)

    def to_words(self) -> np.ndarray:
        header = np.array([self.length, self.width], dtype=np.uint64)
        return np.concatenate([header, self._words]).astype(np.uint64)

    @classmethod
    def from_words(cls, words: np.ndarray) -> "PackedIntArray":
        words = np.asarray(words, dtype=np.uint64)
        if len(words) < 2:
            raise ContainerFormatError("packed array record too short")
        length, width = int(words[0]), int(words[1])
        if not 1 <= width <= 63 or len(words) != 2 + -(-length * width // 64):
            raise ContainerFormatError("packed array record has wrong length")
        obj = cls.__new__(cls)
        obj._init(length, width, words[2:])
        return obj

    def size_in_bits(self) -> int:
        return 64 * (2 + len(self._words))
