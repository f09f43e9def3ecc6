import pytest
from hypothesis import given, settings

from mdnum.errors import ContractError, ResourceError
from mdnum.families import AFamily, generate
from mdnum.graph import Graph, cartesian_product, complete_bipartite, complete_graph, cycle_graph, path_graph, petersen_graph
from mdnum.solver import (
    SolverConfig,
    forced_partition,
    md,
    md_exact,
    md_lower_probe,
    md_upper_bound,
)

from oracles import lex_least_extremal, md_naive
from strategies import connected_graphs


@pytest.mark.parametrize("g, value", [
    (cycle_graph(5), 2),
    (cycle_graph(8), 4),
    (complete_graph(5), 1),
    (path_graph(5), 4),
    (complete_bipartite(2, 3), 1),
    (complete_bipartite(3, 3), 1),
    (petersen_graph(), 2),  # the spokes form a matching cut
    (cartesian_product(complete_graph(2), path_graph(3))[0], 3),
    (Graph(1, ()), 0),
])
def test_known_values(g, value):
    res = md_exact(g)
    assert res.md == value
    assert res.witness.k == value


def test_block_sum():
    # two triangles joined by a bridge: 1 + 1 + 1
    g = Graph(6, ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)))
    res = md_exact(g)
    assert res.md == 3 and sorted(res.block_md) == [1, 1, 1]


def test_forced_partition_merges_triangles_and_squares():
    assert forced_partition(complete_graph(4)).count == 1
    assert forced_partition(cycle_graph(4)).count == 2
    assert forced_partition(cycle_graph(5)).count == 5


def test_bounds_bracket_the_value():
    for g in (cycle_graph(7), petersen_graph(), generate(AFamily(8)).graph, path_graph(4)):
        assert md_lower_probe(g).bound <= md(g) <= md_upper_bound(g)
    assert md_lower_probe(generate(AFamily(8)).graph).bound == 2
    assert md_lower_probe(complete_graph(4)).bound == 1


def test_disconnected_input_is_rejected():
    with pytest.raises(ContractError):
        md_exact(Graph(3, ((0, 1),)))


def test_budget_exhaustion_reports_bounds():
    g = cycle_graph(8).add_edge(0, 4)
    with pytest.raises(ResourceError) as info:
        md_exact(g, SolverConfig(budget=2))
    assert info.value.lower == 1 and info.value.upper >= md(g)


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=2, max_n=7, extra=3))
def test_solver_matches_naive_oracle(g):
    if g.m > 8:
        return
    assert md(g) == md_naive(g)


@settings(max_examples=40, deadline=None)
@given(connected_graphs(min_n=2, max_n=6, extra=2))
def test_witness_is_the_lex_least_extremal_coloring(g):
    if g.m > 7:
        return
    best, rg = lex_least_extremal(g)
    res = md_exact(g)
    assert res.md == best
    assert tuple(c - 1 for c in res.witness.colors) == rg
