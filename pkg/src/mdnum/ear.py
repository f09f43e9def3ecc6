"""Ear decompositions: bases, construction, normal form, the f path function and
the standard / Q / R conditions."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import ContractError, InvariantBreach, StructureError
from .flow import disjoint_paths
from .graph import Graph
from .metrics import is_bipartite, is_two_connected


def _e(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


def path_edges(seq) -> frozenset:
    return frozenset(_e(x, y) for x, y in zip(seq, seq[1:]))


def subpath(seq, a, b) -> tuple[int, ...]:
    """The part of path ``seq`` between ``a`` and ``b``, oriented from ``a``."""
    i, j = seq.index(a), seq.index(b)
    return tuple(seq[i:j + 1]) if i <= j else tuple(reversed(seq[j:i + 1]))


def cycle_arcs(cycle, a, b) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The two a-b arcs of a cycle (given without repeating its first vertex), both from ``a``."""
    L = len(cycle)
    i, j = cycle.index(a), cycle.index(b)
    fwd = [cycle[(i + s) % L] for s in range((j - i) % L + 1)]
    bwd = [cycle[(i - s) % L] for s in range((i - j) % L + 1)]
    return tuple(fwd), tuple(bwd)


# -- bases ---------------------------------------------------------------

@dataclass(frozen=True)
class OddCycle:
    cycle: tuple[int, ...]


@dataclass(frozen=True)
class EvenCycle:
    cycle: tuple[int, ...]
    fixed_edge: tuple[int, int]


@dataclass(frozen=True)
class UmbrellaBase:
    """``spokes[i]`` runs apex -> v_i; ``rims[i]`` runs v_i -> v_{i+1} around the cycle."""

    apex: int
    spokes: tuple[tuple[int, ...], ...]
    rims: tuple[tuple[int, ...], ...]

    @property
    def uniform(self) -> bool:
        return all((len(s) - 1) % 2 == 1 for s in self.spokes) and all(
            (len(r) - 1) % 2 == 0 for r in self.rims)


@dataclass(frozen=True)
class ThetaBase:
    """Three internally disjoint routes sharing their first and last vertices."""

    routes: tuple[tuple[int, ...], ...]

    @property
    def even(self) -> bool:
        return all((len(r) - 1) % 2 == 0 for r in self.routes)

    @property
    def is_k23(self) -> bool:
        return all(len(r) == 3 for r in self.routes)


def base_paths(base) -> list[tuple[int, ...]]:
    """Vertex sequences whose edges are exactly the base's edges."""
    if isinstance(base, (OddCycle, EvenCycle)):
        return [tuple(base.cycle) + (base.cycle[0],)]
    if isinstance(base, UmbrellaBase):
        return list(base.spokes) + list(base.rims)
    if isinstance(base, ThetaBase):
        return list(base.routes)
    raise ContractError(f"unknown base {base!r}")


def base_vertices(base) -> frozenset:
    return frozenset(v for p in base_paths(base) for v in p)


def base_edges(base) -> frozenset:
    return frozenset().union(*(path_edges(p) for p in base_paths(base)))


def cycle_base(cycle, g: Graph):
    """Wrap a cycle as an odd or even base; an even cycle fixes its least-indexed edge."""
    cycle = tuple(cycle)
    if len(cycle) % 2:
        return OddCycle(cycle)
    fixed = min(path_edges(cycle + (cycle[0],)), key=lambda e: g.edge_id(*e))
    return EvenCycle(cycle, fixed)


# -- decompositions ------------------------------------------------------

@dataclass(frozen=True)
class EarDecomposition:
    base: object
    ears: tuple[tuple[int, ...], ...]
    _v0: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ears", tuple(tuple(e) for e in self.ears))
        object.__setattr__(self, "_v0", base_vertices(self.base))

    @property
    def t(self) -> int:
        return len(self.ears)

    def ear(self, i: int) -> tuple[int, ...]:
        if not 1 <= i <= self.t:
            raise ContractError(f"ear index {i} out of range 1..{self.t}")
        return self.ears[i - 1]

    def ends(self, i: int) -> tuple[int, int]:
        e = self.ear(i)
        return e[0], e[-1]

    def size(self, i: int) -> int:
        return len(self.ear(i)) - 1

    def vertices(self, i: int) -> frozenset:
        return self._v0 if i == 0 else frozenset(self.ear(i))

    def internal(self, i: int) -> frozenset:
        """I(L_i); the whole base for ``i = 0``."""
        return self._v0 if i == 0 else frozenset(self.ear(i)[1:-1])

    @property
    def zears(self) -> list[int]:
        return [i for i in range(1, self.t + 1) if set(self.ends(i)) <= self._v0]


def validate_decomposition(g: Graph, dec: EarDecomposition) -> None:
    """Raise :class:`InvariantBreach` unless ``dec`` is an ear decomposition of ``g``."""
    base = dec.base
    seen_edges = set()
    for p in base_paths(base):
        for e in path_edges(p):
            if not g.has_edge(*e):
                raise InvariantBreach(f"base edge {e} is not in the graph")
            seen_edges.add(e)
    verts = set(dec.vertices(0))
    if isinstance(base, (OddCycle, EvenCycle)):
        if len(set(base.cycle)) != len(base.cycle) or len(base.cycle) < 3:
            raise InvariantBreach("base cycle repeats a vertex")
        if isinstance(base, OddCycle) != (len(base.cycle) % 2 == 1):
            raise InvariantBreach("base cycle parity does not match its tag")
    elif isinstance(base, ThetaBase):
        ends = {(r[0], r[-1]) for r in base.routes}
        inner = [set(r[1:-1]) for r in base.routes]
        if len(base.routes) != 3 or len(ends) != 1 or sum(map(len, inner)) != len(set().union(*inner)):
            raise InvariantBreach("theta routes are not internally disjoint with shared ends")
    elif isinstance(base, UmbrellaBase):
        k = len(base.spokes)
        if k < 3 or len(base.rims) != k:
            raise InvariantBreach("umbrella needs k >= 3 spokes and k rims")
        hubs = [s[-1] for s in base.spokes]
        for i in range(k):
            if base.spokes[i][0] != base.apex or base.rims[i][0] != hubs[i] or base.rims[i][-1] != hubs[(i + 1) % k]:
                raise InvariantBreach("umbrella spokes and rims do not line up")
        pieces = [set(s[1:]) for s in base.spokes] + [set(r[1:-1]) for r in base.rims]
        if sum(map(len, pieces)) != len(set().union(*pieces)) or base.apex in set().union(*pieces):
            raise InvariantBreach("umbrella pieces overlap")
    for i in range(1, dec.t + 1):
        ear = dec.ear(i)
        a, b = ear[0], ear[-1]
        if a == b or len(ear) < 2:
            raise InvariantBreach(f"ear {i} is not an open path")
        if a not in verts or b not in verts:
            raise InvariantBreach(f"ear {i} does not attach to earlier pieces")
        inner = ear[1:-1]
        if len(set(inner)) != len(inner) or set(inner) & verts:
            raise InvariantBreach(f"ear {i} reuses a vertex")
        for e in path_edges(ear):
            if e in seen_edges or not g.has_edge(*e):
                raise InvariantBreach(f"ear {i} edge {e} is repeated or missing")
            seen_edges.add(e)
        verts.update(inner)
    if seen_edges != set(g.edges) or len(verts) != g.n:
        raise InvariantBreach("decomposition does not cover the graph")


def ear_decompose_from(g: Graph, base) -> EarDecomposition:
    """Grow ``base`` to all of ``g`` one ear at a time.

    The next ear starts at the least-indexed unused edge touching the current
    subgraph and follows a shortest route through new vertices back to it.
    """
    if not is_two_connected(g):
        raise StructureError("ear decompositions need a 2-connected graph")
    inside = set(base_vertices(base))
    used = set(base_edges(base))
    for e in used:
        if not g.has_edge(*e):
            raise ContractError(f"base edge {e} is not in the graph")
    ears = []
    while len(used) < g.m:
        eid = next(i for i, e in enumerate(g.edges) if e not in used and (e[0] in inside or e[1] in inside))
        x, y = g.edges[eid]
        if x in inside and y in inside:
            ear = (x, y)
        else:
            u, w = (x, y) if x in inside else (y, x)
            ear = _route_back(g, inside, u, w)
        ears.append(ear)
        used |= path_edges(ear)
        inside.update(ear)
    dec = EarDecomposition(base, tuple(ears))
    validate_decomposition(g, dec)
    return dec


def _route_back(g: Graph, inside, u, w):
    parent = {w: None}
    q = deque([w])
    while q:
        x = q.popleft()
        for y in g.adj[x]:
            if y in inside:
                if y == u:
                    continue  # an ear needs two distinct ends
                path = [y]
                z = x
                while z is not None:
                    path.append(z)
                    z = parent[z]
                return (u,) + tuple(reversed(path))
            elif y not in parent:
                parent[y] = x
                q.append(y)
    raise StructureError("no ear leaves and re-enters the subgraph; not 2-connected")


def _cycle_through_edge(g: Graph, eid: int = 0) -> tuple[int, ...]:
    u, v = g.edges[eid]
    parent = {u: None}
    q = deque([u])
    while q and v not in parent:
        x = q.popleft()
        for y in g.adj[x]:
            if (x, y) in ((u, v), (v, u)) or y in parent:
                continue
            parent[y] = x
            q.append(y)
    if v not in parent:
        raise StructureError("edge lies on no cycle")
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return tuple(reversed(path))  # u ... v, closed by the edge vu


def normalize(g: Graph) -> EarDecomposition:
    """A normal ear decomposition: cycle base for even order, odd cycle for odd
    non-bipartite graphs, and an even theta or umbrella for odd bipartite ones."""
    if g.n < 3 or not is_two_connected(g):
        raise StructureError("normalize() needs a 2-connected graph with n >= 3")
    bip, witness = is_bipartite(g)
    if g.n % 2 == 0:
        return ear_decompose_from(g, cycle_base(_cycle_through_edge(g), g))
    if not bip:
        return ear_decompose_from(g, OddCycle(tuple(witness)))
    dec = ear_decompose_from(g, cycle_base(_cycle_through_edge(g), g))
    even = next((i for i in range(1, dec.t + 1) if dec.size(i) % 2 == 0), None)
    if even is None:
        raise InvariantBreach("odd bipartite graph with no even ear")
    ear = dec.ear(even)
    a, b = ear[0], ear[-1]
    allowed = set(range(g.n)) - set(ear[1:-1])
    two = disjoint_paths(g, a, {b}, allowed=allowed, limit=2)
    if len(two) < 2:
        raise InvariantBreach("could not close an even ear into a theta graph")
    theta = ThetaBase(tuple(sorted((tuple(two[0]), tuple(two[1]), tuple(ear)), key=lambda r: (len(r), r))))
    dec = ear_decompose_from(g, theta)
    inner = [set(r[1:-1]) for r in theta.routes]
    for i in dec.zears:
        x, y = dec.ends(i)
        px = next((k for k in range(3) if x in inner[k]), None)
        py = next((k for k in range(3) if y in inner[k]), None)
        if px is None or py is None or px == py:
            continue
        return ear_decompose_from(g, umbrella_around(g, x, theta, px))
    return dec


def umbrella_around(g: Graph, apex: int, theta: ThetaBase, route: int) -> UmbrellaBase:
    """The (apex, C)-umbrella where C is the cycle formed by the routes other than ``route``."""
    r1, r2 = (theta.routes[k] for k in range(3) if k != route)
    cycle = tuple(r1) + tuple(reversed(r2))[1:-1]
    paths = disjoint_paths(g, apex, set(cycle), share_target=False)
    if len(paths) < 3:
        raise InvariantBreach("a route-straddling ear should give at least three spokes")
    pos = {v: i for i, v in enumerate(cycle)}
    paths.sort(key=lambda p: pos[p[-1]])
    hubs = [p[-1] for p in paths]
    k = len(hubs)
    rims = []
    for i in range(k):
        a, b = pos[hubs[i]], pos[hubs[(i + 1) % k]]
        span = (b - a) % len(cycle) or len(cycle)
        rims.append(tuple(cycle[(a + s) % len(cycle)] for s in range(span + 1)))
    return UmbrellaBase(apex, tuple(tuple(p) for p in paths), tuple(rims))


# -- the f path function -------------------------------------------------

class _Undefined:
    """Sentinel for an undefined f(E, i, j)."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __bool__(self):
        return False

    def __repr__(self):
        return "Undefined"


Undefined = _Undefined()


def f_path(dec: EarDecomposition, i: int, j: int):
    """The path between the ends of ``L_j`` inside piece ``i``, or ``Undefined``."""
    if not 0 <= i < j <= dec.t:
        raise ContractError(f"f_path needs 0 <= i < j <= t, got ({i}, {j})")
    a, b = dec.ends(j)
    if i > 0:
        ear = dec.ear(i)
        return subpath(ear, a, b) if a in ear and b in ear else Undefined
    if not {a, b} <= dec.vertices(0):
        return Undefined
    base = dec.base
    if isinstance(base, OddCycle):
        return odd_even_arcs(base, a, b)[0]
    if isinstance(base, EvenCycle):
        x, y = cycle_arcs(base.cycle, a, b)
        return x if base.fixed_edge in path_edges(x) else y
    if isinstance(base, UmbrellaBase):
        for p in base.spokes + base.rims:
            if a in p and b in p:
                return subpath(p, a, b)
        return Undefined
    if isinstance(base, ThetaBase):
        for r in base.routes:
            if a in r and b in r:
                return subpath(r, a, b)
        return Undefined
    raise ContractError(f"unknown base {base!r}")


def odd_even_arcs(base: OddCycle, a, b):
    """``(f_o, f_e)``: the odd and the even arc of an odd cycle between ``a`` and ``b``."""
    x, y = cycle_arcs(base.cycle, a, b)
    return (x, y) if (len(x) - 1) % 2 == 1 else (y, x)


# -- conditions ----------------------------------------------------------

@dataclass(frozen=True)
class CheckResult:
    passed: bool | None  # None: not evaluated
    witness: object = None
    note: str = ""


def check_normal(g: Graph, dec: EarDecomposition) -> CheckResult:
    base = dec.base
    if g.n % 2 == 0:
        ok = isinstance(base, (OddCycle, EvenCycle))
        return CheckResult(ok, None if ok else type(base).__name__, "even order needs a cycle base")
    if not is_bipartite(g)[0]:
        ok = isinstance(base, OddCycle)
        return CheckResult(ok, None if ok else type(base).__name__, "odd non-bipartite needs an odd cycle base")
    if isinstance(base, UmbrellaBase):
        return CheckResult(True)
    if isinstance(base, ThetaBase) and base.even:
        for i in dec.zears:
            x, y = dec.ends(i)
            if not any(x in r and y in r for r in base.routes):
                return CheckResult(False, i, "Z ear straddles two routes")
        return CheckResult(True)
    return CheckResult(False, type(base).__name__, "odd bipartite needs an umbrella or even theta base")


def check_standard(g: Graph, dec: EarDecomposition, overlap: str = "edge") -> CheckResult:
    """Standardness; ``overlap`` chooses whether the even arcs must share an edge or a vertex."""
    if overlap not in ("edge", "vertex"):
        raise ContractError("overlap is 'edge' or 'vertex'")
    if not check_normal(g, dec).passed:
        raise ContractError("check_standard() needs a normal decomposition")
    base = dec.base
    if g.n % 2 == 0:
        ok = isinstance(base, EvenCycle)
        return CheckResult(ok, None if ok else "odd base cycle")
    if isinstance(base, OddCycle):
        z = dec.zears
        arcs = {i: odd_even_arcs(base, *dec.ends(i))[1] for i in z}
        for x in range(len(z)):
            for y in range(x + 1, len(z)):
                p, q = arcs[z[x]], arcs[z[y]]
                meet = path_edges(p) & path_edges(q) if overlap == "edge" else set(p) & set(q)
                if not meet:
                    return CheckResult(False, (z[x], z[y]), "even arcs are disjoint")
        return CheckResult(True)
    if isinstance(base, UmbrellaBase):
        if not base.uniform:
            return CheckResult(False, "umbrella", "umbrella is not uniform")
        for i in dec.zears:
            x, y = dec.ends(i)
            if not any(x in p and y in p for p in base.spokes + base.rims):
                return CheckResult(False, i, "Z ear ends not on one spoke or rim")
        return CheckResult(True)
    if base.is_k23:
        return CheckResult(False, "K23", "theta base is K_{2,3}")
    return CheckResult(True)


def check_QR(dec: EarDecomposition) -> tuple[CheckResult, CheckResult]:
    """Properties Q and R.

    Q is checked against ears ``i >= 1`` only. Taken with I(L_0) = V(L_0) at
    ``i = 0`` it would forbid any ear with exactly one end on the base, which
    rejects extremal graphs such as ``F@VDW`` under a triangle base.
    """
    t = dec.t
    q = CheckResult(True)
    for j in range(1, t + 1):
        ends = set(dec.ends(j))
        for i in range(1, j):
            if ends & dec.internal(i) and not ends <= dec.vertices(i):
                q = CheckResult(False, (i, j), f"ear {j} touches the inside of piece {i} with one end only")
                break
        if not q.passed:
            break
    r = CheckResult(True)
    for k in range(t + 1):
        for i in range(k + 1, t + 1):
            F = f_path(dec, k, i)
            if not F:
                continue
            inside = set(F[1:-1])
            fe = path_edges(F)
            for j in range(k + 1, t + 1):
                if j == i or not set(dec.ends(j)) & inside:
                    continue
                G = f_path(dec, k, j)
                if not G or not path_edges(G) < fe:
                    return q, CheckResult(False, (k, i, j), f"f({k},{j}) is not a proper subpath of f({k},{i})")
    return q, r


def check_odd_ears(dec: EarDecomposition) -> CheckResult:
    for i in range(1, dec.t + 1):
        if dec.size(i) % 2 == 0:
            return CheckResult(False, i, "even ear")
    return CheckResult(True)


def check_odd_f(dec: EarDecomposition) -> CheckResult:
    for j in range(1, dec.t + 1):
        for i in range(j):
            F = f_path(dec, i, j)
            if F and (len(F) - 1) % 2 == 0:
                return CheckResult(False, (i, j), "even f path")
    return CheckResult(True)


# -- dependency analysis -------------------------------------------------

@dataclass(frozen=True)
class EarDependency:
    arcs: tuple[tuple[int, int], ...]
    depth: tuple[int, ...]
    U: tuple[int, ...]
    least_host: tuple[int, ...]  # l_j for j = 1..t (index 0 unused, set to -1)
    choice: tuple[int, int] | None
    fpath: tuple[int, ...] | None


def dependency_analysis(g: Graph, dec: EarDecomposition) -> EarDependency:
    t = dec.t
    if t == 0:
        return EarDependency((), (0,), (), (-1,), None, None)
    arcs = tuple((i, j) for j in range(1, t + 1) for i in range(j) if f_path(dec, i, j))
    out = {i: [] for i in range(t + 1)}
    for i, j in arcs:
        out[i].append(j)
    depth = [-1] * (t + 1)
    depth[0] = 0
    q = deque([0])
    while q:
        x = q.popleft()
        for y in out[x]:
            if depth[y] < 0:
                depth[y] = depth[x] + 1
                q.append(y)
    if min(depth) < 0:
        raise InvariantBreach("some ear is unreachable in the dependency digraph")
    host = [-1] * (t + 1)
    for j in range(1, t + 1):
        ends = set(dec.ends(j))
        host[j] = next((i for i in range(j) if ends <= dec.vertices(i)), -1)
        if host[j] < 0:
            raise InvariantBreach(f"ear {j} has no single earlier piece holding both ends")
    top = max(depth[1:])
    U = tuple(j for j in range(1, t + 1) if depth[j] == top)
    best = None
    for r in U:
        F = f_path(dec, host[r], r)
        if not F:
            raise InvariantBreach(f"f({host[r]},{r}) is undefined")
        key = (len(F), r)
        if best is None or key < best[0]:
            best = (key, r, F)
    _, r, F = best
    for u in set(F[1:-1]) | set(dec.ear(r)[1:-1]):
        if g.degree(u) != 2:
            raise InvariantBreach(f"vertex {u} on the chosen paths has degree {g.degree(u)}, not 2")
    return EarDependency(arcs, tuple(depth), U, tuple(host), (host[r], r), F)
