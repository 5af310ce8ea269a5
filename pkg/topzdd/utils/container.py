__all__ = [
    "MAGIC",
    "VERSION",
    "FIXED_HEADER_BYTES",
    "pack_container",
    "unpack_container",
]

import hashlib
import struct
from typing import Dict, List, Tuple

import numpy as np

from topzdd.utils.errors import ContainerFormatError

MAGIC = b"TZDD"
VERSION = 1

FLAG_DEGENERATE = 1
FLAG_ROOT_TOP = 2

_HEADER = struct.Struct("<4sHHQQQ")
_CHECKSUM_BYTES = 8
_NCOMPONENTS = 16

# header, metadata length, one length word per component and the checksum
FIXED_HEADER_BYTES = _HEADER.size + 8 + 8 * _NCOMPONENTS + _CHECKSUM_BYTES


def _checksum(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=_CHECKSUM_BYTES).digest()


def pack_container(n: int, c: int, root_label: int, flags: int, metadata: str,
                   components: List[np.ndarray]) -> bytes:
    """Serialize the component words of a compressed ZDD.

    Layout, little-endian: magic ``TZDD``, version (u16), flags (u16),
    ``n``, ``c`` and the root label (u64 each), a metadata block (u64 byte
    length, UTF-8 text padded to whole words), then every component as a
    u64 word count followed by its words, and a 64-bit BLAKE2b checksum of
    everything before it.
    """
    if len(components) != _NCOMPONENTS:
        raise ValueError(f"expected {_NCOMPONENTS} components, got {len(components)}")
    text = metadata.encode("utf-8")
    text += b"\0" * (-len(text) % 8)
    parts = [_HEADER.pack(MAGIC, VERSION, flags, n, c, root_label),
             struct.pack("<Q", len(metadata.encode("utf-8"))), text]
    for words in components:
        words = np.asarray(words, dtype="<u8")
        parts.append(struct.pack("<Q", len(words)))
        parts.append(words.tobytes())
    body = b"".join(parts)
    return body + _checksum(body)


def unpack_container(data: bytes) -> Tuple[Dict[str, int], str, List[np.ndarray]]:
    """Inverse of :func:`pack_container`.

    Returns
    -------
    header : :obj:`dict`
        ``n``, ``c``, ``root_label``, ``flags``
    metadata : :obj:`str`
        Metadata text
    components : :obj:`list`
        Words of every component

    Raises
    ------
    ContainerFormatError
        On bad magic, unknown version, checksum mismatch or truncation.

    """
    if len(data) < _HEADER.size + 8 + _CHECKSUM_BYTES:
        raise ContainerFormatError("container truncated")
    magic, version, flags, n, c, root_label = _HEADER.unpack_from(data)
    if magic != MAGIC:
        raise ContainerFormatError(f"bad magic {magic!r}, not a TZDD container")
    if version != VERSION:
        raise ContainerFormatError(f"unsupported container version {version}")
    body, trailer = data[:-_CHECKSUM_BYTES], data[-_CHECKSUM_BYTES:]
    if _checksum(body) != trailer:
        raise ContainerFormatError("checksum mismatch")
    offset = _HEADER.size
    (length,) = struct.unpack_from("<Q", body, offset)
    offset += 8
    metadata = body[offset:offset + length].decode("utf-8")
    offset += length + (-length % 8)
    components = []
    for _ in range(_NCOMPONENTS):
        if offset + 8 > len(body):
            raise ContainerFormatError("container truncated")
        (count,) = struct.unpack_from("<Q", body, offset)
        offset += 8
        end = offset + 8 * count
        if end > len(body):
            raise ContainerFormatError("container truncated")
        components.append(np.frombuffer(body[offset:end], dtype="<u8").astype(np.uint64))
        offset = end
    if offset != len(body):
        raise ContainerFormatError("trailing bytes after the last component")
    header = {"n": n, "c": c, "root_label": root_label, "flags": flags}
    return header, metadata, components
