__all__ = [
    "build_by_states",
    "knapsack_weights",
    "gen_powerset",
    "gen_bounded_range",
    "gen_bounded_card",
    "gen_knapsack",
    "gen_matchings",
    "gen_grid_paths",
    "gen_nqueens",
    "nqueens_solutions",
]

import logging
from typing import Callable, Dict, Hashable, Iterator, List, Optional, Tuple

import numpy as np

from topzdd.ZddStore import ZddStore, BOT, TOP
from topzdd.families.graphs import Edge, grid_graph, simple_paths

logger = logging.getLogger(__name__)

State = Hashable
StepFunc = Callable[[int, State, bool], Optional[State]]


def build_by_states(store: ZddStore, c: int, initial: State, step: StepFunc,
                    accept: Optional[Callable[[State], bool]] = None) -> int:
    """Build a family from a layered state machine.

    Element ``i`` (1..c) is decided at layer ``i``: ``step(i, s, take)``
    returns the state of layer ``i + 1`` or ``None`` when the choice is
    infeasible. States reachable at layer ``c + 1`` become :math:`\\top` if
    ``accept`` holds, :math:`\\bot` otherwise. States are discovered
    breadth-first and nodes are created bottom-up, so no recursion is
    involved and identical sub-families collapse in the store.

    Parameters
    ----------
    store : :obj:`topzdd.ZddStore`
        Target store
    c : :obj:`int`
        Number of layers (elements)
    initial : :obj:`collections.abc.Hashable`
        State before element 1
    step : :obj:`callable`
        Transition ``step(i, state, take) -> state | None``
    accept : :obj:`callable`, optional
        Final acceptance test, defaults to accepting every state

    Returns
    -------
    root : :obj:`int`
        Handle of the family

    """
    transitions: List[Dict[State, Tuple[Optional[State], Optional[State]]]] = []
    layer = {initial}
    for i in range(1, c + 1):
        moves = {}
        following = set()
        for s in layer:
            t0, t1 = step(i, s, False), step(i, s, True)
            moves[s] = (t0, t1)
            following.update(t for t in (t0, t1) if t is not None)
        transitions.append(moves)
        layer = following
    value = {s: (TOP if accept is None or accept(s) else BOT) for s in layer}
    for i in range(c, 0, -1):
        moves = transitions[i - 1]
        value = {
            s: store.make_node(i,
                               BOT if t0 is None else value[t0],
                               BOT if t1 is None else value[t1])
            for s, (t0, t1) in moves.items()
        }
    logger.debug("state construction: %d layers, %d nodes in store", c, len(store) - 2)
    return value[initial]


def gen_powerset(store: ZddStore, A: int) -> int:
    """All subsets of ``{1..A}``"""
    if A < 1:
        raise ValueError(f"powerset needs A >= 1, got {A}")
    return store.power_set(A)


def gen_bounded_range(store: ZddStore, A: int, B: int) -> int:
    """Sets whose largest and smallest element differ by at most ``B``"""
    if not 0 <= B < A:
        raise ValueError(f"bounded_range needs 0 <= B < A, got A={A}, B={B}")

    # state: smallest chosen element, 0 before the first choice,
    # -1 once no further element can join; None is reserved for infeasible
    def step(i, first, take):
        if first == -1:
            return None if take else -1
        if take:
            first = first or i
            if i - first > B:
                return None
        if first and i + 1 - first > B:
            return -1
        return first

    return build_by_states(store, A, 0, step)


def gen_bounded_card(store: ZddStore, A: int, B: int) -> int:
    """Sets with at most ``B`` elements"""
    if not 0 <= B <= A:
        raise ValueError(f"bounded_card needs 0 <= B <= A, got A={A}, B={B}")

    def step(i, count, take):
        if not take:
            return count
        return count + 1 if count < B else None

    return build_by_states(store, A, 0, step)


def knapsack_weights(A: int, W: int, seed: int) -> np.ndarray:
    """Weights of elements ``1..A`` (index ``i - 1``), non-increasing.

    Drawn uniformly from ``[1, W]`` with :class:`numpy.random.Generator`
    seeded by ``seed``, then sorted in decreasing order with ties kept in
    draw order.
    """
    if A < 1 or W < 1:
        raise ValueError(f"knapsack needs A >= 1 and W >= 1, got A={A}, W={W}")
    rng = np.random.default_rng(seed)
    weights = rng.integers(1, W, size=A, endpoint=True)
    order = np.argsort(-weights, kind="stable")
    return weights[order]


def gen_knapsack(store: ZddStore, A: int, W: int, C: int, seed: int) -> int:
    """Sets whose total weight does not exceed ``C``"""
    if C < 0:
        raise ValueError(f"knapsack capacity must be non-negative, got {C}")
    weights = [int(w) for w in knapsack_weights(A, W, seed)]

    def step(i, load, take):
        if not take:
            return load
        load += weights[i - 1]
        return load if load <= C else None

    return build_by_states(store, A, 0, step)


def gen_matchings(store: ZddStore, edges: List[Edge]) -> int:
    """Edge sets (1-based edge indices) that form a matching of the graph"""
    last: Dict[int, int] = {}
    for idx, (u, v) in enumerate(edges, start=1):
        last[u] = last[v] = idx

    # state: matched vertices that still have undecided edges
    def step(i, matched, take):
        u, v = edges[i - 1]
        if take:
            if u in matched or v in matched:
                return None
            matched = matched | {u, v}
        return frozenset(x for x in matched if last[x] > i)

    return build_by_states(store, len(edges), frozenset(), step)


def gen_grid_paths(store: ZddStore, n: int) -> int:
    """Simple paths between the bottom-left and top-right corner of the
    ``n x n`` vertex grid, as sets of edge indices of :func:`grid_graph`."""
    if n < 1:
        raise ValueError(f"grid_paths needs n >= 1, got {n}")
    edges = grid_graph(n)
    start, goal = (n - 1) * n + 1, n
    return store.from_sets(simple_paths(edges, start, goal))


def nqueens_solutions(n: int) -> Iterator[Tuple[int, ...]]:
    """Placements of ``n`` non-attacking queens as row-major cell indices
    (1-based), found by iterative backtracking row by row."""
    cols: List[int] = []
    stack = [0]
    while stack:
        row = len(stack) - 1
        col = stack[-1]
        if col == n:
            stack.pop()
            if cols:
                cols.pop()
            if stack:
                stack[-1] += 1
            continue
        if all(c != col and abs(c - col) != row - r for r, c in enumerate(cols)):
            cols.append(col)
            if len(cols) == n:
                yield tuple(r * n + c + 1 for r, c in enumerate(cols))
                cols.pop()
                stack[-1] += 1
            else:
                stack.append(0)
        else:
            stack[-1] += 1


def gen_nqueens(store: ZddStore, n: int) -> int:
    """Solutions of the n-queens problem over the ``n * n`` board cells"""
    if n < 1:
        raise ValueError(f"nqueens needs n >= 1, got {n}")
    return store.from_sets(nqueens_solutions(n))
