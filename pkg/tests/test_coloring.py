import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mdnum.coloring import (
    EdgeColoring,
    LinearHypergraph,
    build_hypergraph,
    closure_graph,
    color_degree,
    emit_colored,
    first_unseparated_pair,
    hypergraph_cycle_check,
    in_sorted_order,
    is_md,
    necessary_conditions_check,
    parse_colored,
    renumber,
    separated_pair_count,
    separating_colors,
    separation_certificate,
    transport,
    verify_md,
)
from mdnum.errors import ContractError, InvariantBreach, NotMDColoring, ParseError
from mdnum.graph import Graph, complete_bipartite, complete_graph, cycle_graph
from mdnum.metrics import distance_summary
from mdnum.solver import md_exact

from oracles import is_md_naive
from strategies import colorings, connected_graphs

C4 = cycle_graph(4)  # edges (0,1), (1,2), (2,3), (0,3)
C4_PAIRED = EdgeColoring((1, 2, 1, 2))


def test_verify_examples():
    verify_md(C4, C4_PAIRED)
    verify_md(complete_graph(3), EdgeColoring((1, 1, 1)))
    with pytest.raises(NotMDColoring) as info:
        verify_md(C4, EdgeColoring((1, 2, 3, 4)))
    assert info.value.pair == (0, 1)


def test_partial_coloring_is_rejected():
    with pytest.raises(ContractError):
        verify_md(C4, EdgeColoring((1, 2)))
    with pytest.raises(ContractError):
        EdgeColoring((0, 1))


def test_separating_colors_examples():
    cert = separation_certificate(C4, C4_PAIRED)
    assert separating_colors(cert, 0, 1) == {1}  # deleting the class of edge 01 splits 0 from 1
    rainbow = separation_certificate(C4, EdgeColoring((1, 2, 3, 4)))
    assert separating_colors(rainbow, 0, 2) == frozenset()
    with pytest.raises(ContractError):
        separating_colors(cert, 1, 1)


def test_separated_pair_counts():
    assert separated_pair_count(separation_certificate(complete_graph(3), EdgeColoring((1, 1, 1))), 1) == 3
    cert = separation_certificate(C4, C4_PAIRED)
    assert separated_pair_count(cert, 1) == separated_pair_count(cert, 2) == 4
    c6 = cycle_graph(6)
    cert6 = verify_md(c6, EdgeColoring((1, 2, 3, 1, 2, 3)))
    assert [separated_pair_count(cert6, c) for c in (1, 2, 3)] == [9, 9, 9]
    with pytest.raises(ContractError):
        separated_pair_count(cert6, 7)


def test_color_degree():
    star = complete_bipartite(1, 3)
    assert color_degree(star, EdgeColoring((1, 1, 1)), 0) == 1
    assert color_degree(star, EdgeColoring((1, 2, 3)), 0) == 3
    assert color_degree(C4, C4_PAIRED, 2) == 2
    assert color_degree(Graph(2, ()), EdgeColoring(()), 0) == 0


def test_local_conditions():
    assert not necessary_conditions_check(C4, C4_PAIRED)
    bad = necessary_conditions_check(complete_graph(3), EdgeColoring((1, 1, 2)))
    assert [v.kind for v in bad] == ["triangle"]
    bad = necessary_conditions_check(cycle_graph(5), EdgeColoring((1, 2, 3, 4, 5)))
    assert [v.kind for v in bad] == ["5-cycle"]


def test_hypergraph_examples():
    h = build_hypergraph(C4, C4_PAIRED)
    assert len(h.hyperedges) == 4 and all(len(x) == 2 for x in h.hyperedges)
    assert closure_graph(h) == C4
    tri = build_hypergraph(complete_graph(3), EdgeColoring((1, 1, 1)))
    assert tri.hyperedges == (frozenset({0, 1, 2}),)
    assert closure_graph(tri) == complete_graph(3)
    c6 = build_hypergraph(cycle_graph(6), EdgeColoring((1, 2, 3, 1, 2, 3)))
    assert len(c6.hyperedges) == 6
    assert not hypergraph_cycle_check(c6)


def test_hypergraph_linearity_is_enforced():
    with pytest.raises(InvariantBreach):
        LinearHypergraph(4, (frozenset({0, 1, 2}), frozenset({1, 2, 3})), (1, 2))
    with pytest.raises(InvariantBreach):
        LinearHypergraph(3, (frozenset({0, 1}), frozenset({1, 2})), (1, 1))


def test_hyper_three_cycle_is_flagged():
    h = LinearHypergraph(3, (frozenset({0, 1}), frozenset({1, 2}), frozenset({0, 2})), (1, 2, 3))
    assert [v.length for v in hypergraph_cycle_check(h)] == [3]


def test_colored_text_round_trip():
    g, c = in_sorted_order(C4, C4_PAIRED)
    g2, c2 = parse_colored(emit_colored(g, c))
    assert g2 == g and c2 == c
    assert parse_colored("n 2\n0 1\n")[1] is None
    with pytest.raises(ParseError):
        parse_colored("n 2\n0 1\ne 0 0\n")
    with pytest.raises(ContractError):
        parse_colored("n 3\n0 1\n1 2\ne 0 1\n")


def test_transport_and_renumber():
    g = cycle_graph(4)
    h = g.relabel([1, 2, 3, 0])
    moved = transport(g, C4_PAIRED, h, [1, 2, 3, 0])
    assert is_md(h, moved)
    assert renumber(EdgeColoring((5, 3, 5, 9))).colors == (1, 2, 1, 3)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_verify_matches_networkx_oracle(data):
    g = data.draw(connected_graphs(min_n=2, max_n=7))
    c = data.draw(colorings(g, max_colors=4))
    assert is_md(g, c) == is_md_naive(g.n, list(g.edges), c.colors)
    if not is_md(g, c):
        assert first_unseparated_pair(separation_certificate(g, c)) is not None


@settings(max_examples=80, deadline=None)
@given(connected_graphs(min_n=2, max_n=7))
def test_extremal_witness_invariants(g):
    w = md_exact(g).witness
    cert = verify_md(g, w)
    assert not necessary_conditions_check(g, w)
    h = build_hypergraph(g, w, cert)
    assert not hypergraph_cycle_check(h)
    dist = distance_summary(g).dist
    for u in range(g.n):
        for v in range(u + 1, g.n):
            assert len(separating_colors(cert, u, v)) <= dist[u][v]


@settings(max_examples=60, deadline=None)
@given(connected_graphs(min_n=3, max_n=7), st.data())
def test_restriction_to_connected_subgraphs(g, data):
    w = md_exact(g).witness
    keep = data.draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    ids = [e for e in range(g.m) if keep[e]]
    if not ids:
        return
    sub, _ = g.edge_subgraph(ids, keep_vertices=False)
    if sub.is_connected():
        assert is_md(sub, EdgeColoring(tuple(w.colors[e] for e in ids)))
