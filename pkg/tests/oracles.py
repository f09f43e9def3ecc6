"""Brute-force references used only by the test suite."""

from __future__ import annotations

from itertools import combinations

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def is_md_naive(n, edges, colors):
    """Every pair must be split by deleting some color class (networkx components)."""
    comps = {}
    for col in set(colors):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(e for e, c in zip(edges, colors) if c != col)
        where = {}
        for i, comp in enumerate(nx.connected_components(h)):
            for v in comp:
                where[v] = i
        comps[col] = where
    return all(any(w[u] != w[v] for w in comps.values()) for u, v in combinations(range(n), 2))


def set_partitions(m):
    """Restricted-growth strings of length m."""
    if m == 0:
        yield ()
        return
    a = [0] * m

    def go(i, top):
        if i == m:
            yield tuple(a)
            return
        for c in range(top + 2):
            a[i] = c
            yield from go(i + 1, max(top, c))

    a[0] = 0
    yield from go(1, 0)


def md_naive(g):
    """Maximum palette over all edge partitions that are MD colorings."""
    if g.m == 0:
        return 0
    edges = list(g.edges)
    best = 0
    for rg in set_partitions(g.m):
        k = max(rg) + 1
        if k > best and is_md_naive(g.n, edges, rg):
            best = k
    return best


def lex_least_extremal(g):
    """Lexicographically least restricted-growth string among extremal colorings."""
    edges = list(g.edges)
    best, arg = 0, None
    for rg in set_partitions(g.m):
        k = max(rg) + 1
        if k > best and is_md_naive(g.n, edges, rg):
            best, arg = k, rg
    return best, arg


def brute_alpha(g):
    best = 0
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            if all(not g.has_edge(u, v) for u, v in combinations(s, 2)):
                best = r
    return best
