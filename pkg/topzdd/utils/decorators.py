__all__ = ["node_checked"]

from functools import wraps
from numbers import Integral
from typing import Callable, Optional


def node_checked(func: Optional[Callable] = None) -> Callable:
    """Decorator validating the node argument of a compressed-ZDD query.

    The first positional argument after ``self`` must be a ZDD preorder
    in ``[1, self.n]``.

    Parameters
    ----------
    func : :obj:`callable`, optional
        Function to be decorated.

    Notes
    -----
    A query can be simplified to

    .. code-block:: python

        @node_checked
        def label(self, x):
            return do_things(x)

    which raises :class:`IndexError` before ``do_things`` runs when ``x`` is
    out of range, for example on a terminal-only family.

    """

    def decorator(f):
        @wraps(f)
        def wrapper(self, x: int, *args, **kwargs):
            if isinstance(x, bool) or not isinstance(x, Integral):
                raise TypeError(f"node must be an integer preorder, got {x!r}")
            x = int(x)
            if not 1 <= x <= self.n:
                raise IndexError(f"node {x} outside [1, {self.n}]")
            return f(self, x, *args, **kwargs)
        return wrapper
    if func is not None:
        return decorator(func)
    return decorator
