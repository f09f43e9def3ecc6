"""Exact md(G): block decomposition, forced merges and branch-and-bound over coarsenings."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import EdgeColoring, verify_md
from .errors import ContractError, InvariantBreach, ResourceError
from .graph import Graph
from .metrics import blocks, diameter, find_matching_cut, independence_number


# -- partitions --------------------------------------------------------

class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.merges = 0

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.merges += 1
        return True


@dataclass(frozen=True)
class EdgePartition:
    """Edge classes, each sorted, listed by increasing least edge id."""

    m: int
    classes: tuple[tuple[int, ...], ...]
    merges: int = 0

    @property
    def count(self) -> int:
        return len(self.classes)

    def class_of(self) -> list[int]:
        out = [0] * self.m
        for i, cl in enumerate(self.classes):
            for e in cl:
                out[e] = i
        return out

    @classmethod
    def from_union_find(cls, uf: UnionFind) -> "EdgePartition":
        groups: dict[int, list[int]] = {}
        for e in range(len(uf.parent)):
            groups.setdefault(uf.find(e), []).append(e)
        return cls(len(uf.parent), tuple(sorted(tuple(g) for g in groups.values())), uf.merges)


def forced_partition(g: Graph) -> EdgePartition:
    """Merge the edges of every triangle and the opposite edges of every 4-cycle."""
    uf = UnionFind(g.m)
    eid = g.edge_id
    for u, v in g.edges:
        for w in sorted(set(g.adj[u]) & set(g.adj[v])):
            uf.union(eid(u, v), eid(u, w))
            uf.union(eid(u, v), eid(v, w))
    for a, c in combinations(range(g.n), 2):
        common = sorted(set(g.adj[a]) & set(g.adj[c]))
        for b, d in combinations(common, 2):
            # the 4-cycle a-b-c-d-a
            uf.union(eid(a, b), eid(c, d))
            uf.union(eid(b, c), eid(d, a))
    return EdgePartition.from_union_find(uf)


# -- bounds ------------------------------------------------------------

def _block_graph(g: Graph, edge_ids) -> tuple[Graph, list[int]]:
    return g.edge_subgraph(edge_ids, keep_vertices=False)


def block_upper_bound(b: Graph) -> int:
    """Upper bound for a single block (a bridge or a 2-connected graph)."""
    if b.m <= 1:
        return b.m
    if b.m == b.n * (b.n - 1) // 2:
        return 1
    bound = b.n // 2
    if diameter(b) == 2:
        bound = min(bound, 2)
    if b.n <= 20:
        bound = min(bound, independence_number(b)[0])
    return bound


def md_upper_bound(g: Graph) -> int:
    if not g.is_connected():
        raise ContractError("md_upper_bound() needs a connected graph")
    if g.n <= 1:
        return 0
    bt = blocks(g)
    return sum(block_upper_bound(_block_graph(g, es)[0]) for es in bt.block_edges)


# -- lower probe -------------------------------------------------------

@dataclass(frozen=True)
class LowerProbe:
    bound: int
    witness: EdgeColoring


def md_lower_probe(g: Graph) -> LowerProbe:
    """1 always; 2 when a matching-cut exists (cut edges get color 2)."""
    if g.m == 0:
        return LowerProbe(0, EdgeColoring(()))
    cut = find_matching_cut(g) if g.is_connected() else None
    if cut:
        cs = set(cut)
        col = EdgeColoring(tuple(2 if e in cs else 1 for e in range(g.m)))
        if len(col.palette) == 2:
            verify_md(g, col)
            return LowerProbe(2, col)
    col = EdgeColoring((1,) * g.m)
    verify_md(g, col)
    return LowerProbe(1, col)


# -- exact search ------------------------------------------------------

@dataclass(frozen=True)
class SolverConfig:
    budget: int = 10**7  # search nodes per block
    verify: bool = True


@dataclass(frozen=True)
class SolveStats:
    nodes: int
    merges: int
    seconds: float


@dataclass(frozen=True)
class SolveResult:
    md: int
    witness: EdgeColoring
    stats: SolveStats
    block_md: tuple[int, ...] = field(default=())


class _BudgetHit(Exception):
    def __init__(self, upper):
        self.upper = upper


class _BlockSearch:
    def __init__(self, b: Graph, budget: int):
        self.b = b
        self.n = b.n
        self.budget = budget
        self.nodes = 0
        self.part = forced_partition(b)
        self.cmask = [sum(1 << e for e in cl) for cl in self.part.classes]
        K = len(self.cmask)
        suffix = [0] * (K + 1)
        for i in range(K - 1, -1, -1):
            suffix[i] = suffix[i + 1] | self.cmask[i]
        self.suffix = suffix
        self.nbrs = [tuple((w, 1 << b.edge_id(v, w)) for w in b.adj[v]) for v in range(b.n)]
        self.memo: dict[int, tuple[int, ...]] = {}

    def labels(self, removed: int) -> tuple[int, ...]:
        hit = self.memo.get(removed)
        if hit is not None:
            return hit
        n = self.n
        lab = [-1] * n
        nxt = 0
        nbrs = self.nbrs
        for s in range(n):
            if lab[s] >= 0:
                continue
            lab[s] = nxt
            stack = [s]
            while stack:
                x = stack.pop()
                for y, bit in nbrs[x]:
                    if lab[y] < 0 and not removed & bit:
                        lab[y] = nxt
                        stack.append(y)
            nxt += 1
        out = tuple(lab)
        if len(self.memo) > 200_000:
            self.memo.clear()
        self.memo[removed] = out
        return out

    def feasible(self, X, q, U, t) -> bool:
        n = self.n
        sig = [0] * n
        masks = [x | U for x in X[:q]]
        if q < t:
            masks.append(U)
        for mk in masks:
            lab = self.labels(mk)
            sig = [s * n + x for s, x in zip(sig, lab)]
            if len(set(sig)) == n:
                return True
        return False

    def run(self, t: int):
        """Lex-least restricted-growth assignment of classes to exactly t colors, or None."""
        K = len(self.cmask)
        assign = [0] * K
        X = [0] * t
        cmask, suffix = self.cmask, self.suffix

        def dfs(i, q):
            self.nodes += 1
            if self.nodes > self.budget:
                raise _BudgetHit(t)
            U = suffix[i]
            if not self.feasible(X, q, U, t):
                return False
            if i == K:
                return q == t
            bit = cmask[i]
            rest = K - i - 1
            for c in range(q):
                if q + rest < t:
                    break
                X[c] |= bit
                assign[i] = c
                ok = dfs(i + 1, q)
                X[c] &= ~bit
                if ok:
                    return True
            if q < t:
                X[q] |= bit
                assign[i] = q
                ok = dfs(i + 1, q + 1)
                X[q] &= ~bit
                if ok:
                    return True
            return False

        if dfs(0, 0):
            col = [0] * self.b.m
            for i, cl in enumerate(self.part.classes):
                for e in cl:
                    col[e] = assign[i] + 1
            return col
        return None


def solve_block(b: Graph, config: SolverConfig = SolverConfig()):
    """``(md, colors, nodes, merges)`` for one block; colors are 1..md."""
    if b.m == 1:
        return 1, [1], 0, 0
    search = _BlockSearch(b, config.budget)
    ub = min(block_upper_bound(b), search.part.count)
    for t in range(ub, 0, -1):
        try:
            col = search.run(t)
        except _BudgetHit as hit:
            raise ResourceError(
                f"search budget of {config.budget} nodes exhausted on a block with "
                f"{b.n} vertices and {b.m} edges", lower=1, upper=hit.upper,
            ) from None
        if col is not None:
            return t, col, search.nodes, search.part.merges
    raise InvariantBreach("no MD coloring found, but a single color is always MD")


def md_exact(g: Graph, config: SolverConfig = SolverConfig()) -> SolveResult:
    if not g.is_connected():
        raise ContractError("md_exact() needs a connected graph")
    start = time.perf_counter()
    if g.n <= 1:
        return SolveResult(0, EdgeColoring(()), SolveStats(0, 0, 0.0), ())
    bt = blocks(g)
    graphs = [_block_graph(g, es)[0] for es in bt.block_edges]
    colors = [0] * g.m
    offset = nodes = merges = 0
    per_block = []
    for idx, (es, bg) in enumerate(zip(bt.block_edges, graphs)):
        try:
            k, col, nd, mg = solve_block(bg, config)
        except ResourceError as exc:
            lo = offset + exc.lower + (len(graphs) - idx - 1)
            hi = offset + exc.upper + sum(block_upper_bound(h) for h in graphs[idx + 1:])
            raise ResourceError(str(exc).split(" [bounds")[0], lower=lo, upper=hi) from None
        # local edge ids of the block follow increasing global id
        for local, e in enumerate(es):
            colors[e] = col[local] + offset
        offset += k
        nodes += nd
        merges += mg
        per_block.append(k)
    witness = _restricted_growth(EdgeColoring(tuple(colors)))
    if config.verify:
        verify_md(g, witness)
    if witness.k != offset:
        raise InvariantBreach("witness palette size differs from the block sum")
    return SolveResult(offset, witness, SolveStats(nodes, merges, time.perf_counter() - start), tuple(per_block))


def _restricted_growth(c: EdgeColoring) -> EdgeColoring:
    names: dict[int, int] = {}
    return EdgeColoring(tuple(names.setdefault(x, len(names) + 1) for x in c.colors))


def md(g: Graph, config: SolverConfig = SolverConfig()) -> int:
    return md_exact(g, config).md
