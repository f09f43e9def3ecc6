"""Canonical forms and isomorphism-free enumeration of small graphs.

The canonical code of a graph is the minimum, over the leaves of an
individualisation-refinement search tree, of the adjacency bit string read in
graph6 (column-major) order. Every vertex ordering considered is produced by an
isomorphism-invariant procedure, so the minimum is a complete invariant.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import ContractError
from .graph import Graph

MAX_ENUM_N = 6


def _refine(masks, cells):
    cells = [list(c) for c in cells]
    while True:
        cell_masks = [sum(1 << v for v in c) for c in cells]
        new = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            sig = {v: tuple(bin(masks[v] & cm).count("1") for cm in cell_masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
                for k in keys:
                    new.append([v for v in c if sig[v] == k])
            else:
                new.append(c)
        cells = new
        if not changed:
            return cells


def _code(masks, order):
    code = 0
    for j in range(1, len(order)):
        mj = masks[order[j]]
        for i in range(j):
            code = code << 1 | (mj >> order[i] & 1)
    return code


def _twins(masks, u, w):
    return masks[u] & ~(1 << w) == masks[w] & ~(1 << u)


def canonical_order(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)``: ``order[i]`` is the vertex that gets label ``i``."""
    masks = g.masks
    if g.n == 0:
        return 0, []
    best = [None, None]

    def search(cells):
        cells = _refine(masks, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(masks, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        reps = []
        for v in cell:
            if not any(_twins(masks, v, r) for r in reps):
                reps.append(v)
        for v in reps:
            rest = [x for x in cell if x != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    degree_cells = {}
    for v in range(g.n):
        degree_cells.setdefault(len(g.adj[v]), []).append(v)
    search([degree_cells[d] for d in sorted(degree_cells)])
    return best[0], best[1]


def canonical_code(g: Graph) -> tuple[int, int]:
    return (g.n, canonical_order(g)[0])


def graph_from_code(n: int, code: int) -> Graph:
    nbits = n * (n - 1) // 2
    edges = []
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> k & 1:
                edges.append((i, j))
            k -= 1
    return Graph(n, tuple(edges))


def canonical_graph(g: Graph) -> Graph:
    return graph_from_code(g.n, canonical_order(g)[0])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_code(g) == canonical_code(h)


def extend_by_vertex(reps, *, min_new_degree=0):
    """Canonical codes of all graphs obtained by adding one vertex to each of ``reps``."""
    seen = set()
    for g in reps:
        n = g.n
        for s in range(1 << n):
            nb = [v for v in range(n) if s >> v & 1]
            if len(nb) < min_new_degree:
                continue
            h = Graph(n + 1, g.edges + tuple((v, n) for v in nb))
            seen.add(canonical_order(h)[0])
    return [graph_from_code(reps[0].n + 1 if reps else 1, c) for c in sorted(seen)]


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0, ()),)
    return tuple(extend_by_vertex(list(_all_graphs(n - 1))))


def enumerate_nonisomorphic(n: int, filter=None):
    """Yield one canonical representative per isomorphism class on ``n`` vertices.

    Representatives are yielded in increasing canonical-code order. Only
    ``n <= 6`` is supported; larger censuses should be read from graph6 files.
    """
    if n < 0:
        raise ContractError("negative vertex count")
    if n > MAX_ENUM_N:
        raise ContractError(
            f"internal enumeration is capped at n={MAX_ENUM_N}; read a graph6 census instead"
        )
    for g in _all_graphs(n):
        if filter is None or filter(g):
            yield g


@lru_cache(maxsize=None)
def _connected_with_edges(m: int) -> tuple[Graph, ...]:
    if m == 0:
        return (Graph(1, ()),)
    seen = set()
    for g in _connected_with_edges(m - 1):
        n = g.n
        # a graph with a cycle loses a cycle edge; a tree loses a leaf
        for u in range(n):
            for v in range(u + 1, n):
                if not g.has_edge(u, v):
                    seen.add((n, canonical_order(g.add_edge(u, v))[0]))
            h = Graph(n + 1, g.edges + ((u, n),))
            seen.add((n + 1, canonical_order(h)[0]))
    return tuple(graph_from_code(n, c) for n, c in sorted(seen))


def enumerate_connected_by_edges(m: int):
    """One representative per isomorphism class of connected graphs with exactly ``m`` edges."""
    if m < 0:
        raise ContractError("negative edge count")
    if m > 10:
        raise ContractError("edge-count enumeration is capped at m=10")
    yield from _connected_with_edges(m)
