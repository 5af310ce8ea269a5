__all__ = [
    "ZddStore",
    "Terminal",
    "BOT",
    "TOP",
    "read_family",
    "write_family",
    "naive_bytes",
]

import logging
from enum import Enum
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from topzdd.utils.errors import CapacityError, ParseError, ZddOrderError

logger = logging.getLogger(__name__)

# internal handles of the two terminals
BOT = 0
TOP = 1

_OPS = ("union", "intersection", "difference")
_COMMUTATIVE = ("union", "intersection")


class Terminal(Enum):
    """Terminal targets in preorder-named edge lists"""
    BOT = "⊥"
    TOP = "⊤"

    def __repr__(self) -> str:
        return self.value


EdgeTarget = Union[int, Terminal]
PreorderEdge = Tuple[int, EdgeTarget, EdgeTarget]


class ZddStore:
    r"""Store of reduced ordered ZDD nodes.

    Nodes live in an append-only arena and are addressed by integer handles;
    handle ``0`` is the terminal :math:`\bot`, handle ``1`` the terminal
    :math:`\top`. A uniqueness index maps every ``(label, lo, hi)`` triple to
    a single handle, so that equal families share their root handle.

    Parameters
    ----------
    c : :obj:`int`
        Universe size, elements are ``1..c``

    Attributes
    ----------
    c : :obj:`int`
        Universe size

    Notes
    -----
    A branching node :math:`v` with label :math:`\ell(v)` represents

    .. math::
        \mathcal{F}_v = \mathcal{F}_{v_0} \cup
        \{S \cup \{\ell(v)\} : S \in \mathcal{F}_{v_1}\}

    with :math:`\mathcal{F}_\bot = \emptyset` and
    :math:`\mathcal{F}_\top = \{\emptyset\}`. Terminals act as label
    :math:`c + 1` in all order checks.

    """

    def __init__(self, c: int):
        if c < 0:
            raise ValueError(f"universe size must be non-negative, got {c}")
        self.c = c
        self._label: List[int] = [c + 1, c + 1]
        self._lo: List[int] = [BOT, BOT]
        self._hi: List[int] = [BOT, BOT]
        self._unique: Dict[Tuple[int, int, int], int] = {}
        self._memo: Dict[Tuple[str, int, int], int] = {}

    def __len__(self) -> int:
        return len(self._label)

    def __repr__(self) -> str:
        return f"<ZddStore c={self.c} nodes={len(self) - 2}>"

    def label(self, h: int) -> int:
        return self._label[h]

    def lo(self, h: int) -> int:
        return self._lo[h]

    def hi(self, h: int) -> int:
        return self._hi[h]

    @staticmethod
    def is_terminal(h: int) -> bool:
        return h <= TOP

    def make_node(self, label: int, lo: int, hi: int) -> int:
        """Return the handle of the reduced node ``(label, lo, hi)``.

        Parameters
        ----------
        label : :obj:`int`
            Element in ``1..c``
        lo : :obj:`int`
            Handle of the 0-child
        hi : :obj:`int`
            Handle of the 1-child

        Returns
        -------
        h : :obj:`int`
            ``lo`` when ``hi`` is :math:`\\bot`, otherwise the unique handle of
            the triple

        Raises
        ------
        ZddOrderError
            If ``label`` is not smaller than the labels of both children.

        """
        if not 1 <= label <= self.c:
            raise ZddOrderError(f"label {label} outside universe 1..{self.c}")
        if label >= self._label[lo] or label >= self._label[hi]:
            raise ZddOrderError(
                f"label {label} must precede children labels "
                f"{self._label[lo]} and {self._label[hi]}")
        if hi == BOT:
            return lo
        key = (label, lo, hi)
        h = self._unique.get(key)
        if h is None:
            h = len(self._label)
            self._label.append(label)
            self._lo.append(lo)
            self._hi.append(hi)
            self._unique[key] = h
        return h

    # set algebra

    def _terminal_case(self, op: str, f: int, g: int) -> Optional[int]:
        if op == "union":
            if f == BOT:
                return g
            if g == BOT or f == g:
                return f
        elif op == "intersection":
            if f == BOT or g == BOT:
                return BOT
            if f == g:
                return f
        else:
            if f == BOT or f == g:
                return BOT
            if g == BOT:
                return f
        return None

    def _expand(self, op: str, f: int, g: int):
        # (label or None, lo, hi): None label means the result is lo itself;
        # lo / hi are either handles or (f, g) subproblems
        lf, lg = self._label[f], self._label[g]
        if lf == lg:
            return lf, (self._lo[f], self._lo[g]), (self._hi[f], self._hi[g])
        if lf < lg:
            if op == "intersection":
                return None, (self._lo[f], g), None
            return lf, (self._lo[f], g), self._hi[f]
        if op == "union":
            return lg, (f, self._lo[g]), self._hi[g]
        return None, (f, self._lo[g]), None

    def _key(self, op: str, f: int, g: int) -> Tuple[str, int, int]:
        if op in _COMMUTATIVE and g < f:
            f, g = g, f
        return op, f, g

    def apply(self, op: str, f: int, g: int) -> int:
        """Binary set operation between two families of this store.

        Parameters
        ----------
        op : :obj:`str`
            ``"union"``, ``"intersection"`` or ``"difference"``
        f : :obj:`int`
            Handle of the first operand
        g : :obj:`int`
            Handle of the second operand

        Returns
        -------
        h : :obj:`int`
            Handle of the resulting family

        """
        if op not in _OPS:
            raise ValueError(f"unknown operation {op!r}, expected one of {_OPS}")
        for h in (f, g):
            if not 0 <= h < len(self._label):
                raise ValueError(f"handle {h} does not belong to this store")
        memo = self._memo
        stack = [(f, g)]
        while stack:
            a, b = stack[-1]
            key = self._key(op, a, b)
            if key in memo:
                stack.pop()
                continue
            res = self._terminal_case(op, a, b)
            if res is not None:
                memo[key] = res
                stack.pop()
                continue
            label, lo, hi = self._expand(op, a, b)
            pending = [sub for sub in (lo, hi)
                       if isinstance(sub, tuple) and self._key(op, *sub) not in memo]
            if pending:
                stack.extend(pending)
                continue
            lo_h = memo[self._key(op, *lo)]
            if label is None:
                res = lo_h
            else:
                hi_h = memo[self._key(op, *hi)] if isinstance(hi, tuple) else hi
                res = self.make_node(label, lo_h, hi_h)
            memo[key] = res
            stack.pop()
        return memo[self._key(op, f, g)]

    def union(self, f: int, g: int) -> int:
        return self.apply("union", f, g)

    def intersection(self, f: int, g: int) -> int:
        return self.apply("intersection", f, g)

    def difference(self, f: int, g: int) -> int:
        return self.apply("difference", f, g)

    # construction helpers

    def base(self) -> int:
        """The family :math:`\\{\\emptyset\\}`"""
        return TOP

    def empty(self) -> int:
        return BOT

    def singleton(self, s: Iterable[int]) -> int:
        """The family holding exactly the set ``s``"""
        h = TOP
        for e in sorted(set(s), reverse=True):
            h = self.make_node(e, BOT, h)
        return h

    def power_set(self, A: int) -> int:
        """All subsets of ``{1..A}``, a chain of ``A`` nodes"""
        if not 0 <= A <= self.c:
            raise ValueError(f"A={A} outside universe 1..{self.c}")
        h = TOP
        for e in range(A, 0, -1):
            h = self.make_node(e, h, h)
        return h

    def from_sets(self, sets: Iterable[Iterable[int]]) -> int:
        """Build the family holding exactly the given sets.

        Sets are split on the smallest element present, non-recursively; the
        uniqueness index turns the split tree into a reduced ZDD.
        """
        family = sorted({tuple(sorted(set(s))) for s in sets})
        for s in family:
            if s and (s[0] < 1 or s[-1] > self.c):
                raise ValueError(f"set {s} outside universe 1..{self.c}")
        results: List[int] = []
        stack = [("split", family)]
        while stack:
            kind, item = stack.pop()
            if kind == "join":
                hi = results.pop()
                lo = results.pop()
                results.append(self.make_node(item, lo, hi))
                continue
            if not item:
                results.append(BOT)
                continue
            if item == [()]:
                results.append(TOP)
                continue
            m = min(s[0] for s in item if s)
            without = [s for s in item if not s or s[0] != m]
            with_m = [s[1:] for s in item if s and s[0] == m]
            stack.append(("join", m))
            stack.append(("split", with_m))
            stack.append(("split", without))
        return results[0]

    @classmethod
    def from_edges(cls, edges: Sequence[PreorderEdge], c: int) -> Tuple["ZddStore", int]:
        """Rebuild a store from a preorder-named edge list.

        Parameters
        ----------
        edges : :obj:`list`
            ``(label, zero, one)`` per preorder ``1..n``, targets are preorders
            or :class:`Terminal` members
        c : :obj:`int`
            Universe size

        Returns
        -------
        store : :obj:`topzdd.ZddStore`
            New store
        root : :obj:`int`
            Handle of preorder 1 (``TOP``/``BOT`` are not representable here,
            ``edges`` must be non-empty)

        """
        store = cls(c)
        handle: Dict[EdgeTarget, int] = {Terminal.BOT: BOT, Terminal.TOP: TOP}
        # labels strictly increase along edges: build from the largest label down
        order = sorted(range(1, len(edges) + 1), key=lambda x: -edges[x - 1][0])
        for x in order:
            label, zero, one = edges[x - 1]
            handle[x] = store.make_node(label, handle[zero], handle[one])
        return store, handle[1]

    # queries

    def member(self, f: int, s: Sequence[int]) -> bool:
        """Root-to-terminal membership walk for the ascending set ``s``"""
        v = f
        for e in s:
            while v > TOP and self._label[v] < e:
                v = self._lo[v]
            if v <= TOP or self._label[v] != e:
                return False
            v = self._hi[v]
        while v > TOP:
            v = self._lo[v]
        return v == TOP

    def reachable(self, f: int) -> List[int]:
        """Branching nodes reachable from ``f`` in ascending handle order
        (children before parents)."""
        seen = set()
        stack = [f]
        while stack:
            v = stack.pop()
            if v <= TOP or v in seen:
                continue
            seen.add(v)
            stack.append(self._lo[v])
            stack.append(self._hi[v])
        return sorted(seen)

    def count_sets(self, f: int) -> int:
        counts = {BOT: 0, TOP: 1}
        for v in self.reachable(f):
            counts[v] = counts[self._lo[v]] + counts[self._hi[v]]
        return counts[f]

    def enumerate(self, f: int, limit: int = 1 << 20) -> List[Tuple[int, ...]]:
        """All member sets, lexicographic by characteristic vector.

        Raises
        ------
        CapacityError
            If the family holds more than ``limit`` sets.

        """
        total = self.count_sets(f)
        if total > limit:
            raise CapacityError(f"family holds {total} sets, limit is {limit}")
        out = []
        stack = [(f, ())]
        while stack:
            v, prefix = stack.pop()
            if v == BOT:
                continue
            if v == TOP:
                out.append(prefix)
                continue
            stack.append((self._hi[v], prefix + (self._label[v],)))
            stack.append((self._lo[v], prefix))
        return out

    def node_count(self, f: int) -> int:
        return len(self.reachable(f))

    def naive_size_bytes(self, f: int) -> int:
        r"""Baseline size :math:`\lceil(2n\lfloor\log_2 n\rfloor +
        n\lfloor\log_2 c\rfloor)/8\rceil` bytes of a plain node table"""
        return naive_bytes(self.node_count(f), self.c)

    def is_monotone(self, f: int, samples: Iterable[Sequence[int]]) -> bool:
        """Check closure under element removal on the given member sets"""
        for s in samples:
            if not self.member(f, s):
                continue
            for e in s:
                if not self.member(f, [x for x in s if x != e]):
                    return False
        return True

    def preorder_order(self, f: int) -> List[int]:
        """Branching handles in depth-first preorder, 0-edge explored first"""
        order, seen = [], set()
        stack = [f]
        while stack:
            v = stack.pop()
            if v <= TOP or v in seen:
                continue
            seen.add(v)
            order.append(v)
            stack.append(self._hi[v])
            stack.append(self._lo[v])
        return order

    def preorder_edges(self, f: int) -> List[PreorderEdge]:
        """``(label, zero, one)`` for every branching node named by preorder"""
        order = self.preorder_order(f)
        name: Dict[int, EdgeTarget] = {BOT: Terminal.BOT, TOP: Terminal.TOP}
        name.update((v, x) for x, v in enumerate(order, start=1))
        return [(self._label[v], name[self._lo[v]], name[self._hi[v]]) for v in order]

    def audit(self) -> bool:
        """Full-store consistency check (order, zero-suppression, uniqueness).

        Raises
        ------
        AssertionError
            On the first violated property.

        """
        seen = set()
        for h in range(2, len(self._label)):
            label, lo, hi = self._label[h], self._lo[h], self._hi[h]
            if hi == BOT:
                raise AssertionError(f"node {h} has a 1-edge to the empty family")
            if not (lo < h and hi < h):
                raise AssertionError(f"node {h} points to a younger node")
            if label >= self._label[lo] or label >= self._label[hi]:
                raise AssertionError(f"node {h} violates the variable order")
            if (label, lo, hi) in seen or self._unique.get((label, lo, hi)) != h:
                raise AssertionError(f"node {h} is not unique")
            seen.add((label, lo, hi))
        return True


def naive_bytes(n: int, c: int) -> int:
    """Bytes of a plain node table with ``n`` nodes over ``1..c``"""
    if n == 0:
        return 0
    log_n = n.bit_length() - 1
    log_c = max(c, 1).bit_length() - 1
    return -(-(2 * n * log_n + n * log_c) // 8)


def write_family(path: Union[str, Path], store: ZddStore, f: int,
                 limit: int = 1 << 20) -> int:
    """Write a family in text form: header ``c=<c>``, then one set per line
    as ascending integers, a blank line standing for the empty set.

    Returns
    -------
    count : :obj:`int`
        Number of sets written

    """
    sets = store.enumerate(f, limit)
    text = f"c={store.c}\n" + "".join(" ".join(map(str, s)) + "\n" for s in sets)
    Path(path).write_text(text)
    return len(sets)


def read_family(path: Union[str, Path]) -> Tuple[ZddStore, int]:
    """Read a text family written by :func:`write_family`"""
    text = Path(path).read_text()
    lines = text.split("\n")
    header = lines[0].strip()
    if not header.startswith("c="):
        raise ParseError(f"{path}: missing 'c=<universe>' header")
    try:
        c = int(header[2:])
    except ValueError:
        raise ParseError(f"{path}: bad header {header!r}") from None
    body = lines[1:]
    if text.endswith("\n"):
        body = body[:-1]
    sets = []
    for lineno, line in enumerate(body, start=2):
        try:
            s = [int(tok) for tok in line.split()]
        except ValueError:
            raise ParseError(f"{path}:{lineno}: not a list of integers") from None
        if s != sorted(set(s)) or (s and (s[0] < 1 or s[-1] > c)):
            raise ParseError(f"{path}:{lineno}: set must be strictly ascending within 1..{c}")
        sets.append(s)
    store = ZddStore(c)
    root = store.from_sets(sets)
    logger.debug("read %d sets over c=%d from %s", len(sets), c, path)
    return store, root
