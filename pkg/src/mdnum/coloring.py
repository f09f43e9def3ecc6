"""Edge colorings, MD verification, separating colors and the color-component hypergraph."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import ContractError, InvariantBreach, NotMDColoring, ParseError
from .graph import Graph, emit_edge_list, parse_edge_list


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[e]`` is the (positive integer) color of edge id ``e``."""

    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if any(c < 1 for c in self.colors):
            raise ContractError("color ids must be positive integers")

    @property
    def palette(self) -> frozenset:
        return frozenset(self.colors)

    @property
    def k(self) -> int:
        return len(self.palette)

    def __len__(self):
        return len(self.colors)

    def __getitem__(self, e):
        return self.colors[e]

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for e, c in enumerate(self.colors):
            out.setdefault(c, []).append(e)
        return out


def renumber(c: EdgeColoring) -> EdgeColoring:
    """Rename colors to ``1..k`` in order of first appearance along edge ids."""
    names: dict[int, int] = {}
    return EdgeColoring(tuple(names.setdefault(x, len(names) + 1) for x in c.colors))


def monochromatic(g: Graph) -> EdgeColoring:
    return EdgeColoring((1,) * g.m)


def _check_total(g: Graph, c: EdgeColoring):
    if len(c.colors) != g.m:
        raise ContractError(f"coloring covers {len(c.colors)} edges but the graph has {g.m}")


# -- separation --------------------------------------------------------

def _labels_without(g: Graph, removed: set[int]) -> tuple[int, ...]:
    """Component label per vertex of ``g`` minus the edge ids in ``removed``."""
    label = [-1] * g.n
    nxt = 0
    for s in range(g.n):
        if label[s] >= 0:
            continue
        label[s] = nxt
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if label[y] < 0 and g._index[(x, y) if x < y else (y, x)] not in removed:
                    label[y] = nxt
                    stack.append(y)
        nxt += 1
    return tuple(label)


@dataclass(frozen=True)
class SeparationCertificate:
    """Component labels of ``G - E_i`` for every color ``i``."""

    n: int
    labels: dict[int, tuple[int, ...]] = field(repr=False)

    def components(self, color: int) -> list[list[int]]:
        lab = self._get(color)
        groups: dict[int, list[int]] = {}
        for v, x in enumerate(lab):
            groups.setdefault(x, []).append(v)
        return list(groups.values())

    def _get(self, color):
        try:
            return self.labels[color]
        except KeyError:
            raise ContractError(f"color {color} is not in the palette") from None

    def separates(self, color: int, u: int, v: int) -> bool:
        lab = self._get(color)
        return lab[u] != lab[v]


def separation_certificate(g: Graph, c: EdgeColoring) -> SeparationCertificate:
    _check_total(g, c)
    return SeparationCertificate(
        g.n, {col: _labels_without(g, set(es)) for col, es in sorted(c.classes().items())}
    )


def separating_colors(cert: SeparationCertificate, u: int, v: int) -> frozenset:
    if u == v:
        raise ContractError("separating colors are defined for distinct vertices only")
    return frozenset(col for col, lab in cert.labels.items() if lab[u] != lab[v])


def first_unseparated_pair(cert: SeparationCertificate):
    for u, v in combinations(range(cert.n), 2):
        if not any(lab[u] != lab[v] for lab in cert.labels.values()):
            return (u, v)
    return None


def verify_md(g: Graph, c: EdgeColoring) -> SeparationCertificate:
    """Return the certificate, or raise :class:`NotMDColoring` with the first bad pair."""
    cert = separation_certificate(g, c)
    bad = first_unseparated_pair(cert)
    if bad is not None:
        raise NotMDColoring(bad)
    return cert


def is_md(g: Graph, c: EdgeColoring) -> bool:
    try:
        verify_md(g, c)
    except NotMDColoring:
        return False
    return True


def separated_pair_count(cert: SeparationCertificate, color: int) -> int:
    """|S_i|: unordered pairs in different components of ``G - E_i``."""
    sizes: dict[int, int] = {}
    for x in cert._get(color):
        sizes[x] = sizes.get(x, 0) + 1
    n = cert.n
    return n * (n - 1) // 2 - sum(s * (s - 1) // 2 for s in sizes.values())


def color_degree(g: Graph, c: EdgeColoring, v: int) -> int:
    return len({c.colors[g.edge_id(v, w)] for w in g.adj[v]})


# -- necessary local conditions ----------------------------------------

@dataclass(frozen=True)
class LocalViolation:
    kind: str  # "triangle", "4-cycle" or "5-cycle"
    cycle: tuple[int, ...]


def _cycles_of_length(g: Graph, k: int):
    """Each k-cycle subgraph once, as a vertex tuple starting at its least vertex."""
    for start in range(g.n):
        def extend(path):
            last = path[-1]
            if len(path) == k:
                if g.has_edge(last, start) and path[1] < path[-1]:
                    yield tuple(path)
                return
            for w in g.adj[last]:
                if w > start and w not in path:
                    path.append(w)
                    yield from extend(path)
                    path.pop()
        yield from extend([start])


def necessary_conditions_check(g: Graph, c: EdgeColoring) -> list[LocalViolation]:
    """All violations of the triangle / 4-cycle / 5-cycle rules; empty means pass."""
    _check_total(g, c)
    col = lambda a, b: c.colors[g.edge_id(a, b)]  # noqa: E731
    out = []
    for cyc in _cycles_of_length(g, 3):
        if len({col(cyc[i], cyc[(i + 1) % 3]) for i in range(3)}) > 1:
            out.append(LocalViolation("triangle", cyc))
    for cyc in _cycles_of_length(g, 4):
        e = [col(cyc[i], cyc[(i + 1) % 4]) for i in range(4)]
        if e[0] != e[2] or e[1] != e[3]:
            out.append(LocalViolation("4-cycle", cyc))
    for cyc in _cycles_of_length(g, 5):
        e = [col(cyc[i], cyc[(i + 1) % 5]) for i in range(5)]
        if all(e[i] != e[(i + 1) % 5] for i in range(5)):
            out.append(LocalViolation("5-cycle", cyc))
    return out


# -- hypergraph --------------------------------------------------------

@dataclass(frozen=True)
class LinearHypergraph:
    n: int
    hyperedges: tuple[frozenset, ...]
    colors: tuple[int, ...]
    # provenance: (color, index of the component among that color's components)
    origin: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        for h in self.hyperedges:
            if len(h) < 2:
                raise ContractError("hyperedges need at least two vertices")
        for (i, a), (j, b) in combinations(enumerate(self.hyperedges), 2):
            common = len(a & b)
            if common > 1:
                raise InvariantBreach(f"hyperedges {i} and {j} share {common} vertices; not linear")
            if common and self.colors[i] == self.colors[j]:
                raise InvariantBreach(f"hyperedges {i} and {j} have equal color but intersect")


def build_hypergraph(g: Graph, c: EdgeColoring, cert: SeparationCertificate | None = None) -> LinearHypergraph:
    """One hyperedge per nontrivial component of each color class subgraph."""
    _check_total(g, c)
    edges, colors, origin = [], [], []
    for col, es in sorted(c.classes().items()):
        sub, _ = g.edge_subgraph(es)
        comps = [x for x in sub.components() if len(x) > 1]
        for idx, comp in enumerate(comps):
            edges.append(frozenset(comp))
            colors.append(col)
            origin.append((col, idx))
    return LinearHypergraph(g.n, tuple(edges), tuple(colors), tuple(origin))


def closure_graph(h: LinearHypergraph) -> Graph:
    pairs = set()
    for he in h.hyperedges:
        pairs.update(combinations(sorted(he), 2))
    return Graph(h.n, tuple(sorted(pairs)))


@dataclass(frozen=True)
class HyperCycleViolation:
    length: int
    hyperedges: tuple[int, ...]
    vertices: tuple[int, ...]


def hyper_cycles(h: LinearHypergraph, k: int):
    """Linear hyper k-cycles as ``(hyperedge ids, junction vertices)``.

    Distinct hyperedges ``E_1..E_k`` and distinct vertices ``x_1..x_k`` with
    ``x_i`` in ``E_i ∩ E_{i+1}`` (indices mod k). Each cycle is yielded once per
    rotation/reflection class: ``E_1`` is its least hyperedge and ``E_2 < E_k``.
    """
    H = h.hyperedges
    m = len(H)
    for first in range(m):
        def extend(hs, xs):
            if len(hs) == k:
                common = H[hs[-1]] & H[first]
                if hs[1] < hs[-1]:
                    for x in sorted(common - set(xs)):
                        yield tuple(hs), tuple(xs + [x])
                return
            last = H[hs[-1]]
            for x in sorted(last - set(xs)):
                for nxt in range(first + 1, m):
                    if nxt in hs or x not in H[nxt]:
                        continue
                    yield from extend(hs + [nxt], xs + [x])
        yield from extend([first], [])


def hypergraph_cycle_check(h: LinearHypergraph) -> list[HyperCycleViolation]:
    out = []
    for k in (3, 5):
        for hs, xs in hyper_cycles(h, k):
            out.append(HyperCycleViolation(k, hs, xs))
    for hs, xs in hyper_cycles(h, 4):
        c = [h.colors[i] for i in hs]
        if c[0] != c[2] or c[1] != c[3]:
            out.append(HyperCycleViolation(4, hs, xs))
    return out


# -- text format -------------------------------------------------------

def parse_colored(text: str) -> tuple[Graph, EdgeColoring | None]:
    """Parse an edge-list block optionally followed by ``e <index> <color>`` lines.

    The returned graph has its edge ids in sorted ``(u, v)`` order, which is
    the order the ``e`` indices refer to.
    """
    g0 = parse_edge_list(text)
    g = Graph(g0.n, tuple(sorted(g0.edges)))
    got: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line.startswith("e"):
            continue
        parts = line.split()
        if parts[0] != "e" or len(parts) != 3:
            raise ParseError("expected 'e <edge-index> <color>'", line=lineno)
        try:
            idx, col = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("edge index and color must be integers", line=lineno) from None
        if not 0 <= idx < g.m:
            raise ParseError(f"edge index {idx} out of range (m={g.m})", line=lineno)
        if col < 1:
            raise ParseError("colors must be positive", line=lineno)
        if idx in got:
            raise ParseError(f"edge {idx} colored twice", line=lineno)
        got[idx] = col
    if not got:
        return g, None
    missing = [i for i in range(g.m) if i not in got]
    if missing:
        raise ContractError(f"coloring is partial; edge {missing[0]} has no color")
    return g, EdgeColoring(tuple(got[i] for i in range(g.m)))


def emit_coloring(g: Graph, c: EdgeColoring) -> str:
    """``e`` lines indexed by the sorted edge order used by :func:`emit_edge_list`."""
    _check_total(g, c)
    order = sorted(range(g.m), key=lambda e: g.edges[e])
    return "".join(f"e {i} {c.colors[e]}\n" for i, e in enumerate(order))


def emit_colored(g: Graph, c: EdgeColoring) -> str:
    return emit_edge_list(g) + emit_coloring(g, c)


def in_sorted_order(g: Graph, c: EdgeColoring) -> tuple[Graph, EdgeColoring]:
    """Reindex ``g`` and ``c`` so edge ids follow sorted ``(u, v)`` order."""
    order = sorted(range(g.m), key=lambda e: g.edges[e])
    return Graph(g.n, tuple(g.edges[e] for e in order)), EdgeColoring(tuple(c.colors[e] for e in order))


def transport(g: Graph, c: EdgeColoring, h: Graph, vertex_map) -> EdgeColoring:
    """Carry ``c`` from ``g`` to ``h`` where ``vertex_map[v]`` is v's name in ``h``."""
    out = [0] * h.m
    for e, (u, v) in enumerate(g.edges):
        out[h.edge_id(vertex_map[u], vertex_map[v])] = c.colors[e]
    return EdgeColoring(tuple(out))


__all__ = [
    "EdgeColoring", "SeparationCertificate", "LinearHypergraph", "LocalViolation",
    "HyperCycleViolation", "renumber", "monochromatic", "separation_certificate",
    "separating_colors", "verify_md", "is_md", "separated_pair_count", "color_degree",
    "necessary_conditions_check", "build_hypergraph", "closure_graph", "hyper_cycles",
    "hypergraph_cycle_check", "parse_colored", "emit_coloring", "emit_colored",
    "in_sorted_order", "transport", "first_unseparated_pair",
]
