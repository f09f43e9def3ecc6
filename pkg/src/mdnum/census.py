"""Connected graphs by order: enumerated for n <= 6, bundled graph6 files for n = 7, 8."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .canon import MAX_ENUM_N, enumerate_nonisomorphic
from .errors import ContractError
from .graph import Graph
from .graph6 import read_graph6_lines
from .metrics import is_two_connected

BUNDLED = (7, 8)


@lru_cache(maxsize=None)
def connected_graphs(n: int) -> tuple[Graph, ...]:
    if 1 <= n <= MAX_ENUM_N:
        return tuple(g for g in enumerate_nonisomorphic(n) if g.is_connected())
    if n in BUNDLED:
        text = resources.files("mdnum").joinpath("data").joinpath(f"connected{n}.g6").read_text()
        return tuple(g for _, _, g in read_graph6_lines(text.splitlines()))
    raise ContractError(f"no census for n={n}; supply a graph6 file")


def biconnected_graphs(n: int) -> tuple[Graph, ...]:
    return tuple(g for g in connected_graphs(n) if is_two_connected(g))
