"""Graph families with certified extremal MD-colorings, and coloring-preserving transforms.

Structure colorings (cycles, umbrellas, theta graphs, multipaths) are written
against vertex sequences so they can be laid onto a copy of the structure
sitting inside a larger graph; generators build the graph and then call them.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .coloring import EdgeColoring, separating_colors, verify_md
from .errors import ContractError, InvariantBreach
from .graph import (
    Graph,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    join_vertex,
    path_graph,
)
from .metrics import is_two_connected


# -- specs -------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    n: int


@dataclass(frozen=True)
class Complete:
    n: int


@dataclass(frozen=True)
class Path:
    n: int  # vertices


@dataclass(frozen=True)
class CompleteBipartite:
    s: int
    t: int


@dataclass(frozen=True)
class Tree:
    n: int
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Join:
    inner: object  # a basic spec


@dataclass(frozen=True)
class Product:
    left: object
    right: object


@dataclass(frozen=True)
class AFamily:
    n: int
    removed: tuple[tuple[int, int], ...] = ()
    reading: str = "strict"


@dataclass(frozen=True)
class Umbrella:
    spokes: tuple[int, ...]
    rims: tuple[int, ...]


@dataclass(frozen=True)
class Theta:
    a: int
    b: int
    c: int


@dataclass(frozen=True)
class MultiPath:
    halves: tuple[int, ...]


@dataclass(frozen=True)
class KrBoxPath:
    r: int
    k: int  # vertices on the path


FamilySpec = (Cycle, Complete, Path, CompleteBipartite, Tree, Join, Product, AFamily,
              Umbrella, Theta, MultiPath, KrBoxPath)


@dataclass(frozen=True)
class CertifiedGraph:
    graph: Graph
    coloring: EdgeColoring
    claimed_md: int
    provenance: str


def _certify(g: Graph, colors, claimed: int, provenance: str) -> CertifiedGraph:
    c = colors if isinstance(colors, EdgeColoring) else EdgeColoring(tuple(colors))
    verify_md(g, c)
    if c.k != claimed:
        raise InvariantBreach(f"{provenance}: coloring has {c.k} colors, expected {claimed}")
    return CertifiedGraph(g, c, claimed, provenance)


# -- structure colorings -----------------------------------------------

class Fresh:
    """Allocator of unused color ids."""

    def __init__(self, start: int = 1):
        self.next = start

    def __call__(self) -> int:
        c = self.next
        self.next += 1
        return c


def lift_colors(size: int, base: int, fresh: Fresh) -> list[int]:
    """Colors along a path of ``size`` edges that replaces one edge of color ``base``.

    Edge ``i`` and edge ``size + 1 - i`` share a fresh color for
    ``i <= (size - 1) // 2``; the one or two middle edges keep ``base``.
    """
    if size < 1:
        raise ContractError("paths have at least one edge")
    out = [base] * size
    for i in range((size - 1) // 2):
        c = fresh()
        out[i] = out[size - 1 - i] = c
    return out


def _walk(seq):
    return list(zip(seq, seq[1:]))


def _put(assign: dict, seq, colors):
    for (x, y), c in zip(_walk(seq), colors):
        assign[(x, y) if x < y else (y, x)] = c


def cycle_structure_coloring(cycle, fresh: Fresh) -> dict:
    """Extremal coloring of a cycle given as a closed vertex sequence (first vertex not repeated)."""
    L = len(cycle)
    seq = list(cycle) + [cycle[0]]
    out: dict = {}
    if L % 2 == 0:
        cols = [fresh() for _ in range(L // 2)]
        _put(out, seq, [cols[i % (L // 2)] for i in range(L)])
    else:
        base = fresh()
        _put(out, seq, [base, base] + lift_colors(L - 2, base, fresh))
    return out


def multipath_structure_coloring(paths, fresh: Fresh) -> dict:
    """Odd paths sharing both ends: middle edges share one color, mirrored pairs are fresh."""
    mid = fresh()
    out: dict = {}
    for p in paths:
        size = len(p) - 1
        if size % 2 == 0:
            raise ContractError("multipath routes must have odd size")
        _put(out, p, lift_colors(size, mid, fresh))
    return out


def umbrella_structure_coloring(spokes, rims, fresh: Fresh) -> dict:
    """Uniform umbrella: ``spokes[i]`` runs apex -> v_i, ``rims[i]`` runs v_i -> v_{i+1}."""
    k = len(spokes)
    if k < 3 or len(rims) != k:
        raise ContractError("an umbrella has k >= 3 spokes and k rims")
    base = [fresh() for _ in range(k)]
    out: dict = {}
    for i in range(k):
        s, r = spokes[i], rims[i]
        if (len(s) - 1) % 2 == 0 or (len(r) - 1) % 2 == 1:
            raise ContractError("uniform umbrellas have odd spokes and even rims")
        _put(out, s, lift_colors(len(s) - 1, base[i], fresh))
        # the minimal rim v_i u_i v_{i+1}: first edge takes the next spoke's color,
        # second edge this spoke's; longer rims stretch the first edge
        _put(out, r[:-1], lift_colors(len(r) - 2, base[(i + 1) % k], fresh))
        _put(out, r[-2:], [base[i]])
    return out


def theta_structure_coloring(routes, fresh: Fresh) -> dict:
    """Even theta other than K_{2,3}; routes share their first and last vertices."""
    sizes = [len(r) - 1 for r in routes]
    if len(routes) != 3 or any(s % 2 for s in sizes) or min(sizes) < 2:
        raise ContractError("an even theta graph has three routes of even size >= 2")
    if max(sizes) == 2:
        raise ContractError("K_{2,3} has no extremal half coloring")
    order = sorted(range(3), key=lambda i: (-sizes[i], i))
    t3, t2, t1 = (routes[i] for i in order)
    A, B, C = fresh(), fresh(), fresh()
    # theta(2, 2, 4) is u-y-v, u-x-v, u-w-p-q-v colored y: AB, x: BA, w p q: CABC;
    # a longer route stretches its first edge by an odd lift
    out: dict = {}
    for seq, minimal in ((t1, [A, B]), (t2, [B, A]), (t3, [C, A, B, C])):
        stretch = len(seq) - len(minimal)
        _put(out, seq, lift_colors(stretch, minimal[0], fresh) + minimal[1:])
    return out


def to_coloring(g: Graph, assign: dict) -> EdgeColoring:
    try:
        return EdgeColoring(tuple(assign[e] for e in g.edges))
    except KeyError as exc:
        raise InvariantBreach(f"edge {exc.args[0]} left uncolored") from None


# -- builders ----------------------------------------------------------

def _graph_from_paths(paths, n) -> Graph:
    edges = []
    for p in paths:
        edges.extend((x, y) if x < y else (y, x) for x, y in _walk(p))
    return Graph(n, tuple(edges))


def umbrella_layout(spokes, rims):
    """Vertex sequences of the uniform umbrella with the given spoke and rim sizes."""
    k = len(spokes)
    apex, hubs = 0, list(range(1, k + 1))
    nxt = k + 1
    spoke_seqs, rim_seqs = [], []
    for i in range(k):
        inner = list(range(nxt, nxt + spokes[i] - 1))
        nxt += spokes[i] - 1
        spoke_seqs.append([apex] + inner + [hubs[i]])
    for i in range(k):
        inner = list(range(nxt, nxt + rims[i] - 1))
        nxt += rims[i] - 1
        rim_seqs.append([hubs[i]] + inner + [hubs[(i + 1) % k]])
    return nxt, spoke_seqs, rim_seqs


def gen_umbrella(spokes, rims) -> CertifiedGraph:
    spokes, rims = tuple(spokes), tuple(rims)
    if len(spokes) < 3 or len(rims) != len(spokes):
        raise ContractError("an umbrella needs k >= 3 spokes and k rims")
    if any(s < 1 or s % 2 == 0 for s in spokes) or any(r < 2 or r % 2 for r in rims):
        raise ContractError("spokes must have odd size and rims even size >= 2")
    n, sp, rm = umbrella_layout(spokes, rims)
    g = _graph_from_paths(sp + rm, n)
    col = to_coloring(g, umbrella_structure_coloring(sp, rm, Fresh()))
    return _certify(g, col, n // 2, "uniform umbrella")


def theta_layout(a, b, c):
    s, t = 0, 1
    nxt = 2
    routes = []
    for size in (a, b, c):
        inner = list(range(nxt, nxt + size - 1))
        nxt += size - 1
        routes.append([s] + inner + [t])
    return nxt, routes


def gen_theta(a: int, b: int, c: int) -> CertifiedGraph:
    if any(x < 2 or x % 2 for x in (a, b, c)):
        raise ContractError("theta routes must have even size >= 2")
    n, routes = theta_layout(a, b, c)
    g = _graph_from_paths(routes, n)
    if (a, b, c) == (2, 2, 2):
        return _certify(g, (1,) * g.m, 1, "K_{2,3}")
    col = to_coloring(g, theta_structure_coloring(routes, Fresh()))
    return _certify(g, col, n // 2, "even theta graph")


def gen_multipath(halves) -> CertifiedGraph:
    """r >= 2 internally disjoint u-v paths of sizes 2k_i + 1."""
    halves = tuple(halves)
    if len(halves) < 2:
        raise ContractError("a multipath needs r >= 2 paths")
    if any(k < 1 for k in halves):
        raise ContractError("each path needs k_i >= 1 (size at least 3)")
    u, v, nxt = 0, 1, 2
    paths = []
    for k in halves:
        inner = list(range(nxt, nxt + 2 * k))
        nxt += 2 * k
        paths.append([u] + inner + [v])
    g = _graph_from_paths(paths, nxt)
    col = to_coloring(g, multipath_structure_coloring(paths, Fresh()))
    return _certify(g, col, 1 + sum(halves), "odd multipath")


def a_family_graph(n: int) -> tuple[Graph, list[int], list[int]]:
    """A_n with v_i = i - 1 and u_i = ceil(n/2) + i - 1; returns (graph, v list, u list)."""
    hi, lo = (n + 1) // 2, n // 2
    vs = list(range(hi))
    us = list(range(hi, hi + lo))
    edges = list(combinations(vs, 2)) + list(combinations(us, 2)) + [(vs[i], us[i]) for i in range(lo)]
    return Graph(n, tuple(edges)), vs, us


def gen_A_family(n: int, removed=(), reading: str = "strict") -> CertifiedGraph:
    """A_n minus a matching of the v-clique (1-based v indices), matching edges colored 2."""
    if n < 4:
        raise ContractError("A_n needs n >= 4")
    if reading not in ("strict", "broad"):
        raise ContractError("reading is 'strict' or 'broad'")
    g, vs, us = a_family_graph(n)
    removed = tuple(tuple(sorted(p)) for p in removed)
    if removed:
        if n % 2 == 0:
            raise ContractError("removing a matching is only allowed for odd n")
        limit = (n - 1) // 2 if reading == "strict" else (n + 1) // 2
        seen = set()
        for i, j in removed:
            if not (1 <= i < j <= limit):
                raise ContractError(f"pair ({i}, {j}) is outside v_1..v_{limit}")
            if i in seen or j in seen:
                raise ContractError("removed edges must form a matching")
            seen.update((i, j))
        gone = {(vs[i - 1], vs[j - 1]) for i, j in removed}
        g = Graph(n, tuple(e for e in g.edges if e not in gone))
    cut = {(vs[i], us[i]) for i in range(len(us))}
    cols = tuple(2 if e in cut else 1 for e in g.edges)
    return _certify(g, cols, 2, "A_n matching-cut coloring")


def a_family_members(n: int, reading: str = "strict") -> list[Graph]:
    """A_n for even n; every member of the odd-n family under the given reading."""
    if n % 2 == 0:
        return [gen_A_family(n).graph]
    limit = (n - 1) // 2 if reading == "strict" else (n + 1) // 2
    pairs = list(combinations(range(1, limit + 1), 2))
    out = []

    def go(start, chosen, used):
        out.append(gen_A_family(n, tuple(chosen), reading).graph)
        for idx in range(start, len(pairs)):
            i, j = pairs[idx]
            if i not in used and j not in used:
                go(idx + 1, chosen + [(i, j)], used | {i, j})

    go(0, [], frozenset())
    return out


def gen_basic(spec) -> CertifiedGraph:
    if isinstance(spec, Cycle):
        g = cycle_graph(spec.n)
        seq = list(range(spec.n))
        return _certify(g, to_coloring(g, cycle_structure_coloring(seq, Fresh())), spec.n // 2, "cycle")
    if isinstance(spec, Complete):
        if spec.n < 2:
            raise ContractError("complete graphs need n >= 2")
        g = complete_graph(spec.n)
        return _certify(g, (1,) * g.m, 1, "complete graph")
    if isinstance(spec, Path):
        g = path_graph(spec.n)
        if g.m == 0:
            raise ContractError("a path needs at least one edge")
        return _certify(g, range(1, g.m + 1), g.m, "tree")
    if isinstance(spec, Tree):
        g = Graph(spec.n, tuple(spec.edges))
        if g.m != g.n - 1 or not g.is_connected() or g.m == 0:
            raise ContractError("not a tree with at least one edge")
        return _certify(g, range(1, g.m + 1), g.m, "tree")
    if isinstance(spec, CompleteBipartite):
        s, t = sorted((spec.s, spec.t))
        if s < 1:
            raise ContractError("both sides need at least one vertex")
        g = complete_bipartite(spec.s, spec.t)
        if s == 1:
            return _certify(g, range(1, g.m + 1), g.m, "star")
        if s == t == 2:
            col = to_coloring(g, cycle_structure_coloring([0, 2, 1, 3], Fresh()))
            return _certify(g, col, 2, "4-cycle")
        from .solver import md_exact

        res = md_exact(g)
        return _certify(g, res.witness, res.md, "complete bipartite (exact search)")
    if isinstance(spec, Join):
        inner = _basic_graph(spec.inner)
        if not inner.is_connected():
            raise ContractError("the joined graph must be connected")
        g = join_vertex(inner)
        return _certify(g, (1,) * g.m, 1, "join with a vertex")
    raise ContractError(f"gen_basic does not handle {type(spec).__name__}")


def _basic_graph(spec) -> Graph:
    if isinstance(spec, Cycle):
        return cycle_graph(spec.n)
    if isinstance(spec, Complete):
        return complete_graph(spec.n)
    if isinstance(spec, Path):
        return path_graph(spec.n)
    if isinstance(spec, Tree):
        return Graph(spec.n, tuple(spec.edges))
    if isinstance(spec, CompleteBipartite):
        return complete_bipartite(spec.s, spec.t)
    return generate(spec).graph


def product_coloring(a: CertifiedGraph, b: CertifiedGraph) -> CertifiedGraph:
    """Lift certified colorings of ``a`` and ``b`` to ``a □ b`` with disjoint palettes."""
    g, _ = cartesian_product(a.graph, b.graph)
    offset = max(a.coloring.palette, default=0)
    cols = [a.coloring.colors[e] for e in range(a.graph.m) for _ in range(b.graph.n)]
    cols += [b.coloring.colors[e] + offset for _ in range(a.graph.n) for e in range(b.graph.m)]
    return _certify(g, cols, a.claimed_md + b.claimed_md, "cartesian product")


def gen_kr_box_path(r: int, k: int) -> CertifiedGraph:
    if r < 2 or k < 2:
        raise ContractError("need r >= 2 and a path with k >= 2 vertices")
    return product_coloring(gen_basic(Complete(r)), gen_basic(Path(k)))


def path_replace_lift(cg: CertifiedGraph, e: int, t: int) -> CertifiedGraph:
    """Subdivide edge ``e`` into a path of size ``t``; the new edges are appended in path order."""
    g = cg.graph
    if not 0 <= e < g.m:
        raise ContractError(f"edge id {e} not in graph")
    if t < 1:
        raise ContractError("path size must be at least 1")
    if t == 1:
        return cg
    a, b = g.edges[e]
    seq = [a] + list(range(g.n, g.n + t - 1)) + [b]
    keep = [i for i in range(g.m) if i != e]
    new_edges = tuple(g.edges[i] for i in keep) + tuple(
        (x, y) if x < y else (y, x) for x, y in _walk(seq))
    h = Graph(g.n + t - 1, new_edges)
    fresh = Fresh(max(cg.coloring.palette) + 1)
    cols = [cg.coloring.colors[i] for i in keep] + lift_colors(t, cg.coloring.colors[e], fresh)
    return _certify(h, cols, cg.claimed_md + (t - 1) // 2, f"{cg.provenance} + path replacement")


def add_edge_lift(cg: CertifiedGraph, u: int, v: int) -> CertifiedGraph:
    """Add ``uv`` with the unique color separating ``u`` and ``v``."""
    g = cg.graph
    if u == v or g.has_edge(u, v):
        raise ContractError(f"({u}, {v}) must be a non-edge")
    cert = verify_md(g, cg.coloring)
    sep = separating_colors(cert, u, v)
    if len(sep) != 1:
        raise ContractError(f"{len(sep)} colors separate ({u}, {v}); exactly one is required")
    (col,) = sep
    h = g.add_edge(u, v)
    return _certify(h, cg.coloring.colors + (col,), cg.claimed_md, f"{cg.provenance} + edge")


def generate(spec) -> CertifiedGraph:
    """Dispatch any family spec to its generator."""
    if isinstance(spec, (Cycle, Complete, Path, Tree, CompleteBipartite, Join)):
        return gen_basic(spec)
    if isinstance(spec, Product):
        return product_coloring(generate(spec.left), generate(spec.right))
    if isinstance(spec, AFamily):
        return gen_A_family(spec.n, spec.removed, spec.reading)
    if isinstance(spec, Umbrella):
        return gen_umbrella(spec.spokes, spec.rims)
    if isinstance(spec, Theta):
        return gen_theta(spec.a, spec.b, spec.c)
    if isinstance(spec, MultiPath):
        return gen_multipath(spec.halves)
    if isinstance(spec, KrBoxPath):
        return gen_kr_box_path(spec.r, spec.k)
    raise ContractError(f"unknown family spec {spec!r}")


def is_two_connected_family(cg: CertifiedGraph) -> bool:
    return is_two_connected(cg.graph)
