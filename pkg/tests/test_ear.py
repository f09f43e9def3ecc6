import pytest
from hypothesis import given, settings

from mdnum.census import biconnected_graphs
from mdnum.ear import (
    EarDecomposition,
    EvenCycle,
    OddCycle,
    ThetaBase,
    UmbrellaBase,
    Undefined,
    check_normal,
    check_odd_ears,
    check_odd_f,
    check_QR,
    check_standard,
    cycle_arcs,
    cycle_base,
    dependency_analysis,
    ear_decompose_from,
    f_path,
    normalize,
    subpath,
    validate_decomposition,
)
from mdnum.errors import ContractError, InvariantBreach, StructureError
from mdnum.graph import Graph, complete_bipartite, cycle_graph, path_graph
from mdnum.graph6 import parse_graph6

from strategies import biconnected_graphs as biconnected_strategy


def _graph(n, *paths):
    edges = []
    for p in paths:
        edges += [(x, y) if x < y else (y, x) for x, y in zip(p, p[1:])]
    return Graph(n, tuple(edges))


def _cycle_dec(n_total, cycle, *ears):
    g = _graph(n_total, tuple(cycle) + (cycle[0],), *ears)
    dec = EarDecomposition(cycle_base(cycle, g), ears)
    validate_decomposition(g, dec)
    return g, dec


C9 = tuple(range(9))


def test_helpers():
    assert subpath((4, 5, 6, 7), 6, 4) == (6, 5, 4)
    assert cycle_arcs((0, 1, 2, 3, 4), 1, 3) == ((1, 2, 3), (1, 0, 4, 3))


def test_validation_catches_broken_decompositions():
    g = cycle_graph(5).add_edge(0, 2)
    validate_decomposition(g, EarDecomposition(OddCycle((0, 1, 2, 3, 4)), ((0, 2),)))
    with pytest.raises(InvariantBreach):
        validate_decomposition(g, EarDecomposition(OddCycle((0, 1, 2, 3, 4)), ()))
    with pytest.raises(InvariantBreach):
        validate_decomposition(g, EarDecomposition(OddCycle((0, 1, 2, 3, 4)), ((0, 2), (2, 0))))
    with pytest.raises(InvariantBreach):
        validate_decomposition(g, EarDecomposition(EvenCycle((0, 1, 2, 3, 4), (0, 1)), ((0, 2),)))


def test_ear_indexing():
    _, dec = _cycle_dec(11, C9, (0, 9, 2), (2, 10, 4))
    assert dec.t == 2 and dec.ends(2) == (2, 4) and dec.size(1) == 2
    assert dec.internal(1) == {9} and dec.internal(0) == set(C9)
    assert dec.zears == [1, 2]
    with pytest.raises(ContractError):
        dec.ear(3)


def test_f_path_rows():
    # odd cycle: the odd arc between the ends
    _, dec = _cycle_dec(9, (0, 1, 2, 3, 4), (0, 5, 6, 7, 2), (5, 8, 7))
    assert f_path(dec, 0, 1) == (0, 4, 3, 2)
    # ends inside an earlier ear: the subpath of that ear
    assert f_path(dec, 1, 2) == (5, 6, 7)
    assert f_path(dec, 0, 2) is Undefined
    # K_4: an ear ends in no common earlier piece
    _, k4 = _cycle_dec(4, (0, 1, 2), (0, 3, 1), (2, 3))
    assert not f_path(k4, 1, 2) and not f_path(k4, 0, 2)
    with pytest.raises(ContractError):
        f_path(dec, 2, 1)


def test_f_path_on_even_cycle_takes_the_fixed_edge():
    _, dec = _cycle_dec(7, (0, 1, 2, 3, 4, 5), (0, 6, 3))
    assert dec.base.fixed_edge == (0, 1)
    assert f_path(dec, 0, 1) == (0, 1, 2, 3)


def test_f_path_on_theta_and_umbrella():
    theta = ThetaBase(((0, 2, 1), (0, 3, 1), (0, 4, 5, 6, 1)))
    dec = EarDecomposition(theta, ((4, 6),))
    assert f_path(dec, 0, 1) == (4, 5, 6)
    umb = UmbrellaBase(0, ((0, 1), (0, 2), (0, 3)), ((1, 4, 2), (2, 5, 3), (3, 6, 1)))
    assert umb.uniform
    dec = EarDecomposition(umb, ((4, 5),))
    assert f_path(dec, 0, 1) is Undefined
    assert f_path(EarDecomposition(umb, ((1, 2),)), 0, 1) == (1, 4, 2)


@pytest.mark.parametrize("second, edge, vertex", [
    ((1, 10, 3), True, True),    # even arcs 0-1-2 and 1-2-3 share an edge
    ((2, 10, 4), False, True),   # only the vertex 2 in common
    ((4, 10, 6), False, False),  # disjoint
])
def test_standard_on_c9(second, edge, vertex):
    g, dec = _cycle_dec(11, C9, (0, 9, 2), second)
    res = check_standard(g, dec, "edge")
    assert res.passed is edge
    if not edge:
        assert res.witness == (1, 2)
    assert check_standard(g, dec, "vertex").passed is vertex


def test_standard_rejects_k23_and_bad_input():
    g = complete_bipartite(2, 3)
    dec = normalize(g)
    assert isinstance(dec.base, ThetaBase) and dec.base.is_k23
    assert check_standard(g, dec).passed is False
    with pytest.raises(ContractError):
        check_standard(g, dec, "face")
    # an even cycle base is not normal for an odd non-bipartite graph
    g2, bad = _cycle_dec(5, (0, 1, 2, 3), (0, 4, 1))
    assert not check_normal(g2, bad).passed
    with pytest.raises(ContractError):
        check_standard(g2, bad)


def test_even_order_needs_an_even_base_cycle_to_be_standard():
    g, dec = _cycle_dec(6, (0, 1, 2, 3, 4), (0, 5, 2))
    assert check_normal(g, dec).passed
    assert check_standard(g, dec).passed is False


def test_qr_examples():
    _, plain = _cycle_dec(6, tuple(range(6)))
    assert all(r.passed for r in check_QR(plain))
    _, nested = _cycle_dec(12, tuple(range(6)), (0, 6, 7, 8, 9, 1), (6, 10, 9), (7, 11, 8))
    q, r = check_QR(nested)
    assert q.passed and r.passed
    _, crossed = _cycle_dec(8, tuple(range(6)), (0, 6, 2), (1, 7, 3))
    q, r = check_QR(crossed)
    assert q.passed and r.passed is False and r.witness == (0, 1, 2)


def test_q_catches_a_one_sided_ear():
    _, dec = _cycle_dec(8, tuple(range(6)), (0, 6, 7, 3), (6, 2))
    q, _ = check_QR(dec)
    assert q.passed is False and q.witness == (1, 2)


def test_q_ignores_the_base_piece():
    # extremal graph whose decomposition hangs ears off the base by one end
    g = parse_graph6("F@VDW")
    dec = normalize(g)
    assert check_QR(dec)[0].passed


def test_parity_checks():
    _, dec = _cycle_dec(9, (0, 1, 2, 3, 4), (0, 5, 6, 7, 2), (5, 8, 7))
    assert check_odd_ears(dec).passed is False
    assert check_odd_ears(dec).witness == 1
    _, dec = _cycle_dec(7, (0, 1, 2, 3, 4), (0, 5, 6, 2))
    assert check_odd_ears(dec).passed and check_odd_f(dec).passed
    _, dec = _cycle_dec(7, (0, 1, 2, 3, 4, 5), (0, 6, 2))
    assert check_odd_f(dec).passed is False


def test_dependency_base_case_and_single_ear():
    g, dec = _cycle_dec(6, tuple(range(6)))
    assert dependency_analysis(g, dec).choice is None
    g, dec = _cycle_dec(8, tuple(range(6)), (0, 6, 7, 3))
    dep = dependency_analysis(g, dec)
    assert dep.choice == (0, 1) and dep.fpath == (0, 1, 2, 3)


def test_dependency_picks_the_deeper_ear():
    g, dec = _cycle_dec(10, tuple(range(6)), (0, 6, 7, 8, 3), (6, 9, 8))
    dep = dependency_analysis(g, dec)
    assert dep.depth == (0, 1, 2) and dep.U == (2,)
    assert dep.choice == (1, 2) and dep.fpath == (6, 7, 8)


def test_dependency_degree_failure_is_a_breach():
    # the chosen arc 0-1-2-3 carries a chord endpoint
    g, dec = _cycle_dec(8, tuple(range(6)), (0, 6, 7, 3), (1, 4))
    with pytest.raises(InvariantBreach):
        dependency_analysis(g, dec)


def test_normalize_rejects_non_biconnected():
    with pytest.raises(StructureError):
        normalize(path_graph(4))
    with pytest.raises(StructureError):
        ear_decompose_from(path_graph(3), OddCycle((0, 1, 2)))


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_normalize_on_census(n):
    kinds = set()
    for g in biconnected_graphs(n):
        dec = normalize(g)
        validate_decomposition(g, dec)
        assert check_normal(g, dec).passed
        kinds.add(type(dec.base).__name__)
    if n % 2 == 0:
        assert kinds <= {"OddCycle", "EvenCycle"}
    if n == 7:
        assert "UmbrellaBase" in kinds and "ThetaBase" in kinds


@settings(max_examples=80, deadline=None)
@given(biconnected_strategy(max_n=12))
def test_normalize_random(g):
    dec = normalize(g)
    validate_decomposition(g, dec)
    assert check_normal(g, dec).passed
