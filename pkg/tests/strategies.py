"""Hypothesis strategies for small graphs and colorings."""

from __future__ import annotations

from hypothesis import strategies as st

from mdnum.coloring import EdgeColoring
from mdnum.graph import Graph


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, k in zip(pairs, keep) if k))


@st.composite
def connected_graphs(draw, min_n=1, max_n=8, extra=None):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    if rest:
        cap = len(rest) if extra is None else min(extra, len(rest))
        more = draw(st.lists(st.sampled_from(rest), max_size=cap, unique=True))
        edges.update(more)
    perm = draw(st.permutations(range(n)))
    return Graph(n, tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edges)))


@st.composite
def biconnected_graphs(draw, max_n=9, max_ear=4):
    """A cycle grown by random open ears, which keeps the graph 2-connected."""
    k = draw(st.integers(3, min(max_n, 6)))
    edges = {(i, (i + 1) % k) if i < (i + 1) % k else ((i + 1) % k, i) for i in range(k)}
    n = k
    for _ in range(draw(st.integers(0, 4))):
        a, b = draw(st.lists(st.integers(0, n - 1), min_size=2, max_size=2, unique=True))
        size = draw(st.integers(1, max_ear))
        if n + size - 1 > max_n:
            size = 1
        if size == 1:
            edges.add((min(a, b), max(a, b)))
            continue
        seq = [a] + list(range(n, n + size - 1)) + [b]
        n += size - 1
        edges.update((min(x, y), max(x, y)) for x, y in zip(seq, seq[1:]))
    return Graph(n, tuple(sorted(edges)))


@st.composite
def colorings(draw, g, max_colors=None):
    top = max_colors or max(g.m, 1)
    return EdgeColoring(tuple(draw(st.integers(1, top)) for _ in range(g.m)))
