"""Simple undirected graphs with stable edge ids, plus edge-list I/O."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .errors import ContractError, ParseError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, eq=False)
class Graph:
    """Vertices are ``0..n-1``; ``edges[i]`` is the edge with id ``i`` (``u < v``).

    Instances are immutable. Equality compares the vertex count and the edge
    *set*, so two graphs listing the same edges in a different order are equal
    (their edge ids differ, though).
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(init=False, repr=False)
    masks: tuple[int, ...] = field(init=False, repr=False)
    _index: dict = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 0:
            raise ContractError("negative vertex count")
        norm = []
        index = {}
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise ContractError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={self.n}")
            e = _norm(u, v)
            if e in index:
                raise ContractError(f"parallel edge {e}")
            index[e] = len(norm)
            norm.append(e)
            nbrs[u].append(v)
            nbrs[v].append(u)
        adj = tuple(tuple(sorted(x)) for x in nbrs)
        masks = tuple(sum(1 << w for w in a) for a in adj)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "masks", masks)
        object.__setattr__(self, "_index", index)

    # -- basic queries -------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and set(self.edges) == set(other.edges)

    def __hash__(self):
        return hash((self.n, frozenset(self.edges)))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _norm(u, v) in self._index

    def edge_id(self, u: int, v: int) -> int:
        try:
            return self._index[_norm(u, v)]
        except KeyError:
            raise ContractError(f"({u}, {v}) is not an edge") from None

    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    # -- derived graphs ------------------------------------------------
    def components(self, vertices=None) -> list[list[int]]:
        """Connected components (sorted vertex lists), optionally of an induced subgraph."""
        allowed = set(range(self.n)) if vertices is None else set(vertices)
        seen = set()
        out = []
        for s in sorted(allowed):
            if s in seen:
                continue
            comp = [s]
            seen.add(s)
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y in allowed and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced_subgraph(self, vertices) -> tuple[Graph, list[int]]:
        """Return the induced subgraph relabelled ``0..k-1`` and the list new->old."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return Graph(len(old), tuple(edges)), old

    def edge_subgraph(self, edge_ids, *, keep_vertices=True) -> tuple[Graph, list[int]]:
        """Subgraph on the given edge ids.

        With ``keep_vertices`` the vertex set is unchanged; otherwise only the
        endpoints are kept and relabelled. Returns ``(graph, new->old vertex map)``.
        Edge order follows increasing original edge id.
        """
        ids = sorted(set(edge_ids))
        if keep_vertices:
            return Graph(self.n, tuple(self.edges[i] for i in ids)), list(range(self.n))
        old = sorted({x for i in ids for x in self.edges[i]})
        pos = {v: k for k, v in enumerate(old)}
        return Graph(len(old), tuple((pos[self.edges[i][0]], pos[self.edges[i][1]]) for i in ids)), old

    def remove_vertex(self, v: int) -> tuple[Graph, list[int]]:
        return self.induced_subgraph(x for x in range(self.n) if x != v)

    def remove_edge(self, u: int, v: int) -> Graph:
        e = _norm(u, v)
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, self.edges + (_norm(u, v),))

    def relabel(self, perm) -> Graph:
        """Graph with vertex ``v`` renamed ``perm[v]``; edge ids are preserved."""
        return Graph(self.n, tuple(_norm(perm[u], perm[v]) for u, v in self.edges))


# -- constructors ------------------------------------------------------

def from_edges(n: int, edges) -> Graph:
    return Graph(n, tuple(tuple(e) for e in edges))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple((u, v) for v in range(n) for u in range(v)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ContractError("cycles need at least 3 vertices")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices (``n - 1`` edges)."""
    if n < 1:
        raise ContractError("paths need at least one vertex")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete_bipartite(s: int, t: int) -> Graph:
    return Graph(s + t, tuple((i, s + j) for i in range(s) for j in range(t)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, tuple(outer + spokes + inner))


def join_vertex(g: Graph) -> Graph:
    """``v ∨ g``: a new vertex ``g.n`` adjacent to every vertex of ``g``."""
    return Graph(g.n + 1, g.edges + tuple((v, g.n) for v in range(g.n)))


def cartesian_product(g: Graph, h: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """``g □ h``; vertex ``i`` of the result is the pair ``labels[i]``.

    Pairs are numbered ``(u, v) -> u * h.n + v``. Edges of the form
    ``((u, v), (x, v))`` come first, in g-edge then h-vertex order, followed by
    ``((u, v), (u, y))``.
    """
    if g.n == 0 or h.n == 0:
        raise ContractError("cartesian product of an empty graph")
    labels = [(u, v) for u in range(g.n) for v in range(h.n)]
    idx = lambda u, v: u * h.n + v  # noqa: E731
    edges = [(idx(u, v), idx(x, v)) for (u, x), v in product(g.edges, range(h.n))]
    edges += [(idx(u, v), idx(u, y)) for u, (v, y) in product(range(g.n), h.edges)]
    return Graph(g.n * h.n, tuple(edges)), labels


def disjoint_union(g: Graph, h: Graph) -> Graph:
    return Graph(g.n + h.n, g.edges + tuple((u + g.n, v + g.n) for u, v in h.edges))


# -- edge-list text format ---------------------------------------------

def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines.

    Blank lines and ``#`` comments are ignored. Lines starting with ``e``
    (coloring records) terminate the graph block.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise ParseError("expected 'n <count>' header", line=lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError("vertex count is not an integer", line=lineno) from None
            if n < 0:
                raise ParseError("negative vertex count", line=lineno)
            continue
        if parts[0] == "e":
            break
        if len(parts) != 2:
            raise ParseError("expected 'u v'", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("endpoint is not an integer", line=lineno) from None
        if u == v:
            raise ParseError(f"self-loop at {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"endpoint out of range for n={n}", line=lineno)
        e = _norm(u, v)
        if e in seen:
            raise ParseError(f"duplicate edge {e}", line=lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError("missing 'n <count>' header")
    return Graph(n, tuple(edges))


def emit_edge_list(g: Graph) -> str:
    """Deterministic listing: header, then edges sorted by ``(u, v)`` with ``u < v``."""
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def sorted_edges(g: Graph) -> Graph:
    """Same graph with edge ids reassigned in ``(u, v)`` order (what the edge-list format stores)."""
    return Graph(g.n, tuple(sorted(g.edges)))


def all_pairs(n: int):
    return combinations(range(n), 2)
