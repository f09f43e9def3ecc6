"""Structural metrics: connectivity, blocks, distances, bipartiteness,
independence number and matching-cuts."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import ContractError, ResourceError
from .flow import local_connectivity
from .graph import Graph


# -- connectivity ------------------------------------------------------

def connectivity(g: Graph) -> int:
    """Vertex connectivity κ(g); 0 for disconnected graphs, n-1 for complete ones."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    # Esfahanian-Hakimi: a min-degree vertex v is either outside some minimum
    # separator (pairs v, w) or inside it (pairs of neighbours of v).
    v = min(range(n), key=lambda x: (g.degree(x), x))
    best = g.degree(v)
    for w in range(n):
        if w != v and not g.has_edge(v, w):
            best = min(best, local_connectivity(g, v, w))
    for x, y in combinations(g.adj[v], 2):
        if not g.has_edge(x, y):
            best = min(best, local_connectivity(g, x, y))
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    return g.n > k and connectivity(g) >= k


def is_two_connected(g: Graph) -> bool:
    return g.n >= 3 and connectivity(g) >= 2


# -- blocks ------------------------------------------------------------

@dataclass(frozen=True)
class BlockTree:
    blocks: tuple[frozenset, ...]
    block_edges: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset
    incidence: tuple[tuple[int, int], ...]  # (block index, cut vertex)

    def is_bridge(self, i: int) -> bool:
        return len(self.block_edges[i]) == 1

    @property
    def leaf_blocks(self) -> tuple[int, ...]:
        if len(self.blocks) == 1:
            return (0,)
        deg = [0] * len(self.blocks)
        for b, _ in self.incidence:
            deg[b] += 1
        return tuple(i for i, d in enumerate(deg) if d == 1)


def blocks(g: Graph) -> BlockTree:
    """Block/cut-vertex decomposition of a connected graph (iterative Hopcroft-Tarjan)."""
    if not g.is_connected():
        raise ContractError("blocks() needs a connected graph; split components first")
    if g.n == 1:
        return BlockTree((frozenset({0}),), ((),), frozenset(), ())
    disc = [-1] * g.n
    low = [0] * g.n
    time = 0
    edge_stack: list[int] = []
    found_edges: list[list[int]] = []
    cuts = set()
    disc[0] = low[0] = time
    time += 1
    root_children = 0
    stack = [(0, -1, iter(g.adj[0]))]
    while stack:
        v, pe, it = stack[-1]
        advanced = False
        for w in it:
            eid = g.edge_id(v, w)
            if eid == pe:
                continue
            if disc[w] == -1:
                edge_stack.append(eid)
                disc[w] = low[w] = time
                time += 1
                stack.append((w, eid, iter(g.adj[w])))
                advanced = True
                break
            if disc[w] < disc[v]:
                edge_stack.append(eid)
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        u = stack[-1][0]
        low[u] = min(low[u], low[v])
        if low[v] >= disc[u]:
            if u != 0:
                cuts.add(u)
            else:
                root_children += 1
            comp = []
            while True:
                e = edge_stack.pop()
                comp.append(e)
                if e == pe:
                    break
            found_edges.append(sorted(comp))
    if root_children > 1:
        cuts.add(0)
    found_edges.sort()
    blks = tuple(frozenset(x for e in es for x in g.edges[e]) for es in found_edges)
    incidence = tuple((i, c) for i, b in enumerate(blks) for c in sorted(b & cuts))
    return BlockTree(blks, tuple(tuple(es) for es in found_edges), frozenset(cuts), incidence)


# -- distances ---------------------------------------------------------

@dataclass(frozen=True)
class DistanceSummary:
    dist: tuple[tuple[int, ...], ...]
    diameter: int
    mu: Fraction


def bfs_distances(g: Graph, s: int) -> list[int]:
    d = [-1] * g.n
    d[s] = 0
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if d[y] < 0:
                d[y] = d[x] + 1
                q.append(y)
    return d


def distance_summary(g: Graph) -> DistanceSummary:
    if not g.is_connected():
        raise ContractError("distance_summary() needs a connected graph")
    dist = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    total = sum(dist[u][v] for u, v in combinations(range(g.n), 2))
    pairs = g.n * (g.n - 1) // 2
    mu = Fraction(total, pairs) if pairs else Fraction(0)
    diameter = max((max(row) for row in dist), default=0)
    return DistanceSummary(dist, diameter, mu)


def diameter(g: Graph) -> int:
    return distance_summary(g).diameter


def mean_distance_bound(n: int, k: int) -> Fraction:
    """Upper bound on the mean distance of a k-connected graph of order n."""
    if k < 1 or n < 2:
        raise ContractError("need k >= 1 and n >= 2")
    return (n + k - 1) // k * (Fraction(n - 1) - Fraction(k, 2) * ((n - 1) // k)) / (n - 1)


# -- bipartiteness -----------------------------------------------------

def is_bipartite(g: Graph) -> tuple[bool, list[int]]:
    """``(True, side)`` with ``side[v] in {0, 1}``, or ``(False, odd_cycle)``."""
    side = [-1] * g.n
    parent = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.adj[x]:
                if side[y] < 0:
                    side[y] = 1 - side[x]
                    parent[y] = x
                    q.append(y)
                elif side[y] == side[x]:
                    return False, _odd_cycle(parent, x, y)
    return True, side


def _odd_cycle(parent, x, y):
    px = [x]
    while parent[px[-1]] >= 0:
        px.append(parent[px[-1]])
    py = [y]
    while parent[py[-1]] >= 0:
        py.append(parent[py[-1]])
    anc = set(px)
    j = next(i for i, v in enumerate(py) if v in anc)
    lca = py[j]
    i = px.index(lca)
    return px[: i + 1] + list(reversed(py[:j]))


# -- independence number -----------------------------------------------

def independence_number(g: Graph, limit: int = 20) -> tuple[int, list[int]]:
    """Exact α(g) with a maximum independent set, by branch and bound."""
    if g.n > limit:
        raise ResourceError(f"independence_number limited to n <= {limit}, got {g.n}")
    masks = g.masks
    full = (1 << g.n) - 1

    # greedy: repeatedly take a min-degree vertex of what remains
    rem, greedy = full, 0
    while rem:
        v = min(_bits(rem), key=lambda x: bin(masks[x] & rem).count("1"))
        greedy |= 1 << v
        rem &= ~(masks[v] | 1 << v)
    best = [bin(greedy).count("1"), greedy]

    def go(rem, chosen, size):
        if not rem:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + bin(rem).count("1") <= best[0]:
            return
        # vertices of degree <= 1 in the remainder can always be taken
        for v in _bits(rem):
            if bin(masks[v] & rem).count("1") <= 1:
                go(rem & ~(masks[v] | 1 << v), chosen | 1 << v, size + 1)
                return
        v = max(_bits(rem), key=lambda x: bin(masks[x] & rem).count("1"))
        go(rem & ~(masks[v] | 1 << v), chosen | 1 << v, size + 1)
        go(rem & ~(1 << v), chosen, size)

    go(full, 0, 0)
    return best[0], list(_bits(best[1]))


def _bits(mask):
    v = 0
    while mask:
        if mask & 1:
            yield v
        mask >>= 1
        v += 1


# -- matching cuts -----------------------------------------------------

def find_matching_cut(g: Graph, limit: int = 16) -> list[int] | None:
    """Edge ids of a matching-cut, ``[]`` for a disconnected graph, or ``None``."""
    if g.n > limit:
        raise ResourceError(f"matching-cut search limited to n <= {limit}, got {g.n}")
    if g.n <= 1:
        return None
    comps = g.components()
    if len(comps) > 1:
        return []
    order = []
    seen = {0}
    q = deque([0])
    while q:
        x = q.popleft()
        order.append(x)
        for y in g.adj[x]:
            if y not in seen:
                seen.add(y)
                q.append(y)
    label = [-1] * g.n
    cross = [0] * g.n

    def go(i, count1):
        if i == g.n:
            return 0 < count1 < g.n
        v = order[i]
        for b in (0, 1) if i else (0,):
            touched = []
            ok = True
            mine = 0
            for w in g.adj[v]:
                if label[w] >= 0 and label[w] != b:
                    mine += 1
                    cross[w] += 1
                    touched.append(w)
                    if cross[w] > 1:
                        ok = False
            if mine > 1:
                ok = False
            if ok:
                label[v] = b
                cross[v] = mine
                if go(i + 1, count1 + b):
                    return True
                label[v] = -1
                cross[v] = 0
            for w in touched:
                cross[w] -= 1
        return False

    if not go(0, 0):
        return None
    return [i for i, (u, v) in enumerate(g.edges) if label[u] != label[v]]


def has_matching_cut(g: Graph, limit: int = 16) -> bool:
    return find_matching_cut(g, limit) is not None
