"""Planarity of small graphs by searching for a K5 or K3,3 minor."""

from __future__ import annotations

from itertools import combinations

from .canon import canonical_order
from .errors import ResourceError
from .graph import Graph

MAX_N = 10


def _reduce(n: int, edges: set) -> tuple[int, frozenset]:
    """Strip vertices of degree <= 1 and smooth degree-2 vertices; relabel densely."""
    edges = set(edges)
    alive = set(range(n))
    changed = True
    while changed:
        changed = False
        nbrs = {v: set() for v in alive}
        for u, v in edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        for v in sorted(alive):
            d = len(nbrs[v])
            if d <= 1:
                alive.discard(v)
                edges = {e for e in edges if v not in e}
                changed = True
                break
            if d == 2:
                a, b = sorted(nbrs[v])
                alive.discard(v)
                edges = {e for e in edges if v not in e}
                # if a, b are already adjacent the path a-v-b is redundant
                edges.add((a, b))
                changed = True
                break
    pos = {v: i for i, v in enumerate(sorted(alive))}
    return len(pos), frozenset((pos[u], pos[v]) if pos[u] < pos[v] else (pos[v], pos[u]) for u, v in edges)


def _has_k33_subgraph(n: int, edges: frozenset) -> bool:
    if n != 6:
        return False
    for side in combinations(range(1, 6), 2):
        a = (0,) + side
        b = tuple(v for v in range(6) if v not in a)
        if all(((x, y) if x < y else (y, x)) in edges for x in a for y in b):
            return True
    return False


def _contract(n: int, edges: frozenset, u: int, v: int) -> tuple[int, set]:
    """Merge v into u (u < v) and drop v's label."""
    out = set()
    for x, y in edges:
        x = u if x == v else x
        y = u if y == v else y
        if x == y:
            continue
        x = x - (x > v)
        y = y - (y > v)
        out.add((x, y) if x < y else (y, x))
    return n - 1, out


def is_planar_small(g: Graph) -> bool:
    if g.n > MAX_N:
        raise ResourceError(f"minor-search planarity is limited to n <= {MAX_N}, got {g.n}")
    memo: dict = {}

    def nonplanar(n, edges) -> bool:
        n, edges = _reduce(n, edges)
        if n < 5:
            return False
        m = len(edges)
        if m > 3 * n - 6:
            return True
        if n == 5:
            return m == 10
        if n == 6 and _has_k33_subgraph(n, edges):
            return True
        key = canonical_order(Graph(n, tuple(sorted(edges))))[0], n
        if key in memo:
            return memo[key]
        res = False
        for e in sorted(edges):
            if nonplanar(n, edges - {e}) or nonplanar(*_contract(n, edges, *e)):
                res = True
                break
        memo[key] = res
        return res

    return not nonplanar(g.n, set(g.edges))
