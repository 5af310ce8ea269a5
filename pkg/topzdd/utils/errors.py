__all__ = [
    "ZddOrderError",
    "CapacityError",
    "ParseError",
    "TopTreeError",
    "BuildError",
    "CorruptionError",
    "ContainerFormatError",
]


class ZddOrderError(ValueError):
    """A node would violate the variable order of the store."""


class CapacityError(OverflowError):
    """A family holds more sets than the caller allowed."""


class ParseError(ValueError):
    """Malformed graph, family or spec text."""


class TopTreeError(RuntimeError):
    """Illegal merge or stalled greedy round while building a top tree."""


class BuildError(RuntimeError):
    """A build artefact cannot be encoded (e.g. packed width overflow)."""


class CorruptionError(RuntimeError):
    """The compressed structure is inconsistent at query time."""


class ContainerFormatError(ValueError):
    """Bad magic, version or checksum in a serialized container."""
