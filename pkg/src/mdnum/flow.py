"""Unit-capacity max-flow for internally vertex-disjoint paths (vertex splitting)."""

from __future__ import annotations

from collections import deque

from .graph import Graph

INF = 1 << 30


def disjoint_paths(g: Graph, source: int, targets, *, allowed=None, share_target=None, limit=None):
    """Maximum family of paths from ``source`` into ``targets``.

    The paths share only ``source``; each ends at the first target vertex it
    reaches (targets are never passed through) and distinct paths end at
    distinct targets, except that when ``share_target`` is true (the default for
    a single target) they may all end at that one vertex. ``allowed`` restricts
    the vertices paths may use. Returns a list of vertex lists
    ``[source, ..., target]`` in a deterministic order.
    """
    targets = set(targets)
    if share_target is None:
        share_target = len(targets) == 1
    verts = set(range(g.n)) if allowed is None else set(allowed) | {source} | targets
    # node ids: 2v = v_in, 2v+1 = v_out, sink = 2n
    sink = 2 * g.n
    cap: dict[int, dict[int, int]] = {}

    def arc(a, b, c):
        cap.setdefault(a, {})
        cap.setdefault(b, {})
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in sorted(verts):
        if v == source:
            continue
        if v in targets:
            arc(2 * v, sink, INF if share_target else 1)
        else:
            arc(2 * v, 2 * v + 1, 1)
    for u, v in g.edges:
        if u not in verts or v not in verts:
            continue
        for a, b in ((u, v), (v, u)):
            if a in targets or b == source:
                continue
            arc(2 * a + 1, 2 * b, 1)
    start = 2 * source + 1
    if start not in cap:
        return []
    flow_value = 0
    while limit is None or flow_value < limit:
        parent = {start: None}
        queue = deque([start])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in sorted(cap[a]):
                if cap[a][b] > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while parent[b] is not None:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow_value += 1
    # flow on an original arc a->b equals the residual capacity on b->a minus its own original
    used: dict[int, list[int]] = {}
    for u, v in g.edges:
        for a, b in ((u, v), (v, u)):
            na, nb = 2 * a + 1, 2 * b
            if na in cap and nb in cap.get(na, {}) and cap[nb].get(na, 0) > 0 and _is_forward(a, b, targets, source):
                used.setdefault(a, []).append(b)
    paths = []
    for first in sorted(used.get(source, [])):
        path = [source, first]
        while path[-1] not in targets:
            nxt = used[path[-1]].pop()
            path.append(nxt)
        paths.append(path)
    return paths


def _is_forward(a, b, targets, source):
    return a not in targets and b != source


def local_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t nonadjacent)."""
    return len(disjoint_paths(g, s, {t}))
