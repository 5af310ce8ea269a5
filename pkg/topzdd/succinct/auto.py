__all__ = [
    "bv_auto",
    "bv_from_words",
]

from typing import Sequence, Union

import numpy as np

from topzdd.succinct.Bitvector import Bitvector, KIND_PLAIN
from topzdd.succinct.SparseBitvector import SparseBitvector, KIND_SPARSE, KIND_FLIPPED
from topzdd.utils.errors import ContainerFormatError

AnyBitvector = Union[Bitvector, SparseBitvector]


def bv_auto(bits: Union[Sequence[int], np.ndarray]) -> AnyBitvector:
    """Pick the bitvector representation from the density of ones.

    Below 1/4 ones the Elias-Fano form is used, below 1/4 zeros its flipped
    form, otherwise a plain bitvector. The chosen variant is available as
    ``kind`` on the returned object.

    Parameters
    ----------
    bits : :obj:`numpy.ndarray` or :obj:`list`
        Sequence of 0/1 values

    Returns
    -------
    bv : :obj:`topzdd.succinct.Bitvector` or :obj:`topzdd.succinct.SparseBitvector`
        Bitvector with rank/select support

    """
    bits = np.asarray(bits, dtype=np.uint8).ravel()
    n = len(bits)
    if n == 0:
        return Bitvector(bits)
    ones = int(bits.sum())
    if 4 * ones < n:
        return SparseBitvector(bits)
    if 4 * (n - ones) < n:
        return SparseBitvector(bits, flipped=True)
    return Bitvector(bits)


def bv_from_words(words: np.ndarray) -> AnyBitvector:
    """Deserialize any bitvector written by ``to_words``"""
    if len(words) == 0:
        raise ContainerFormatError("empty bitvector record")
    kind = int(words[0])
    if kind == KIND_PLAIN:
        return Bitvector.from_words(words)
    if kind in (KIND_SPARSE, KIND_FLIPPED):
        return SparseBitvector.from_words(words)
    raise ContainerFormatError(f"unknown bitvector kind {kind}")
