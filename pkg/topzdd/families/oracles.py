"""Brute-force reference families.

Every oracle enumerates candidate sets directly from the family definition,
independently of the ZDD machinery, and returns them as ascending tuples.
They are meant for small instances only.
"""
__all__ = [
    "all_subsets",
    "powerset_oracle",
    "bounded_range_oracle",
    "bounded_card_oracle",
    "knapsack_oracle",
    "matchings_oracle",
    "grid_paths_oracle",
    "grid_paths_count",
    "nqueens_oracle",
]

from itertools import combinations, permutations
from typing import Iterator, List, Sequence, Set, Tuple

from topzdd.families.graphs import Edge, grid_graph

SetTuple = Tuple[int, ...]


def all_subsets(c: int) -> Iterator[SetTuple]:
    for k in range(c + 1):
        yield from combinations(range(1, c + 1), k)


def powerset_oracle(A: int) -> Set[SetTuple]:
    return set(all_subsets(A))


def bounded_range_oracle(A: int, B: int) -> Set[SetTuple]:
    return {s for s in all_subsets(A) if not s or s[-1] - s[0] <= B}


def bounded_card_oracle(A: int, B: int) -> Set[SetTuple]:
    return {s for s in all_subsets(A) if len(s) <= B}


def knapsack_oracle(weights: Sequence[int], C: int) -> Set[SetTuple]:
    """Subset-sum filter; element ``i`` weighs ``weights[i - 1]``"""
    return {s for s in all_subsets(len(weights))
            if sum(weights[i - 1] for i in s) <= C}


def matchings_oracle(edges: List[Edge]) -> Set[SetTuple]:
    """Edge-index sets whose edges are pairwise vertex-disjoint"""
    out = set()
    for s in all_subsets(len(edges)):
        ends = [v for i in s for v in edges[i - 1]]
        if len(ends) == len(set(ends)):
            out.add(s)
    return out


def grid_paths_oracle(n: int) -> Set[SetTuple]:
    """Corner-to-corner simple paths by checking every edge subset.

    A subset is a simple path between the two corners when both corners
    have degree one, every other touched vertex degree two, and the edges
    are connected.
    """
    edges = grid_graph(n)
    start, goal = (n - 1) * n + 1, n
    if start == goal:
        return {()}
    out = set()
    for s in all_subsets(len(edges)):
        degree = {}
        for i in s:
            for v in edges[i - 1]:
                degree[v] = degree.get(v, 0) + 1
        if degree.get(start) != 1 or degree.get(goal) != 1:
            continue
        if any(d != 2 for v, d in degree.items() if v not in (start, goal)):
            continue
        # walk from start, a cycle elsewhere leaves edges unvisited
        v, prev, visited = start, None, 0
        while True:
            nxt = [i for i in s if v in edges[i - 1] and i != prev]
            if not nxt:
                break
            prev = nxt[0]
            a, b = edges[prev - 1]
            v = b if a == v else a
            visited += 1
        if v == goal and visited == len(s):
            out.add(s)
    return out


def grid_paths_count(n: int) -> int:
    """Number of corner-to-corner simple paths by depth-first counting over
    vertex coordinates."""
    if n == 1:
        return 1
    goal = (0, n - 1)
    seen = [[False] * n for _ in range(n)]
    count = 0
    stack = [((n - 1, 0), 0)]
    seen[n - 1][0] = True
    moves = ((0, 1), (1, 0), (0, -1), (-1, 0))
    while stack:
        (r, c), k = stack[-1]
        if k == len(moves):
            stack.pop()
            seen[r][c] = False
            continue
        stack[-1] = ((r, c), k + 1)
        rr, cc = r + moves[k][0], c + moves[k][1]
        if not (0 <= rr < n and 0 <= cc < n) or seen[rr][cc]:
            continue
        if (rr, cc) == goal:
            count += 1
            continue
        seen[rr][cc] = True
        stack.append(((rr, cc), 0))
    return count


def nqueens_oracle(n: int) -> Set[SetTuple]:
    """Column permutations without shared diagonals"""
    out = set()
    for perm in permutations(range(n)):
        if len({r + c for r, c in enumerate(perm)}) == n and \
                len({r - c for r, c in enumerate(perm)}) == n:
            out.add(tuple(r * n + c + 1 for r, c in enumerate(perm)))
    return out
