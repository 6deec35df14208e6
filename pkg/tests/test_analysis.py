
import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from ggraph.analysis import (
    INF,
    Perfection,
    analyze,
    class_degrees,
    clique_number,
    even_order_clique_check,
    find_odd_hole,
    is_cograph,
    is_induced_cycle,
    is_perfect,
    isolated_vertices_of_difference,
    max_clique,
    twin_reduce,
    weighted_diameter,
)
from ggraph.errors import BudgetExceeded, PreconditionFailed
from ggraph.graphs import Graph, class_graph, complement, difference_graph, element_graph, power_graph
from ggraph.lattice import CyclicLattice
from ggraph.specs import build_group
from oracles import has_induced_p4, induced_odd_holes, is_perfect_brute


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return Graph.from_edges(n, edges)


def nxg(g: Graph) -> nx.Graph:
    return g.to_networkx()


# -- analyze -----------------------------------------------------------------

def test_c4_summary():
    r = analyze(Graph.cycle(4))
    assert r.connected and r.diameter == 2 and r.girth == 4
    assert r.bipartite and r.all_degrees_even and r.eulerian


def test_two_triangles():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    r = analyze(g)
    assert r.diameter == INF and r.component_diameters == [1, 1]
    assert r.girth == 3 and not r.bipartite
    assert r.eulerian_per_component and not r.eulerian


def test_z12_difference_graph_analysis():
    r = analyze(difference_graph(build_group("Z(12)")))
    assert (r.diameter, r.girth, r.bipartite, r.eulerian) == (2, 4, True, True)


@given(graphs())
def test_analyze_matches_networkx(g):
    h = nxg(g)
    r = analyze(g)
    assert len(r.components) == nx.number_connected_components(h)
    assert r.bipartite == nx.is_bipartite(h)
    if r.bipartite:
        assert all(r.coloring[u] != r.coloring[v] for u, v in g.edges())
    assert r.girth == nx.girth(h)
    if g.n and nx.is_connected(h):
        assert r.diameter == nx.diameter(h)
    elif g.n:
        assert r.diameter == INF
    assert r.all_degrees_even == all(d % 2 == 0 for _, d in h.degree)


# -- cographs ----------------------------------------------------------------

def test_cograph_examples():
    assert is_cograph(Graph.complete(4)) == (True, None)
    ok, w = is_cograph(Graph.path(4))
    assert not ok and is_induced_path(Graph.path(4), w)


def is_induced_path(g, path):
    a, b, c, d = path
    return (g.adjacent(a, b) and g.adjacent(b, c) and g.adjacent(c, d)
            and not g.adjacent(a, c) and not g.adjacent(b, d) and not g.adjacent(a, d))


def test_power_graph_of_z4_z2_is_cograph():
    ok, _ = is_cograph(power_graph(build_group("Z(4) x Z(2)")))
    assert ok


@given(graphs(max_n=8))
def test_cograph_matches_brute_force(g):
    ok, w = is_cograph(g)
    assert ok == (not has_induced_p4(nxg(g)))
    if not ok:
        assert is_induced_path(g, w)


def test_cograph_cap():
    with pytest.raises(BudgetExceeded):
        is_cograph(Graph.empty(10), vertex_cap=5)


# -- twin reduction -----------------------------------------------------------

def test_complete_graph_reduces_to_a_vertex():
    assert twin_reduce(Graph.complete(6)).reduced.n == 1


def test_complete_bipartite_reduction():
    k33 = nx.complete_bipartite_graph(3, 3)
    g = Graph.from_edges(6, k33.edges())
    assert twin_reduce(g, closed_twins=False).reduced.n == 2
    # K2 left by the open-twin pass has closed twins, so a full reduction ends at one vertex
    assert twin_reduce(g).reduced.n == 1


def test_c4_reduction():
    assert twin_reduce(Graph.cycle(4), closed_twins=False).reduced.edge_count() == 1
    assert twin_reduce(Graph.cycle(4)).reduced.n == 1


def test_c5_has_no_twins():
    tr = twin_reduce(Graph.cycle(5))
    assert tr.reduced.n == 5 and tr.rounds == 0


def _has_twins(g: Graph) -> bool:
    for u in range(g.n):
        for v in range(u + 1, g.n):
            ou = g.rows[u] & ~(1 << v)
            ov = g.rows[v] & ~(1 << u)
            if g.rows[u] == g.rows[v] or (ou == ov and g.adjacent(u, v)):
                return True
    return False


@given(graphs(max_n=10))
def test_twin_reduction_invariants(g):
    tr = twin_reduce(g)
    r = tr.reduced
    assert not _has_twins(r)
    assert twin_reduce(r).reduced.rows == r.rows
    for u in range(g.n):
        for v in range(g.n):
            cu, cv = tr.class_map[u], tr.class_map[v]
            if cu != cv:
                assert g.adjacent(u, v) == r.adjacent(cu, cv)


# -- odd holes and perfection --------------------------------------------------

def test_odd_hole_examples():
    assert sorted(find_odd_hole(Graph.cycle(5))) == [0, 1, 2, 3, 4]
    assert len(find_odd_hole(Graph.cycle(7))) == 7
    assert find_odd_hole(Graph.cycle(7), max_len=5) is None
    assert find_odd_hole(Graph.cycle(6)) is None
    assert find_odd_hole(complement(Graph.cycle(7))) is None
    k = nx.complete_bipartite_graph(4, 5)
    assert find_odd_hole(Graph.from_edges(9, k.edges())) is None


def test_hole_budget():
    with pytest.raises(BudgetExceeded):
        find_odd_hole(Graph.cycle(9), budget=3)


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_odd_hole_matches_brute_force(g):
    hole = find_odd_hole(g)
    holes = induced_odd_holes(nxg(g))
    assert (hole is None) == (not holes)
    if hole is not None:
        assert len(hole) % 2 == 1 and len(hole) >= 5
        assert is_induced_cycle(g, hole)


@settings(max_examples=150)
@given(graphs(max_n=9))
def test_perfection_matches_brute_force(g):
    expected = is_perfect_brute(nxg(g))
    for reduce in (True, False):
        res = is_perfect(g, reduce=reduce)
        assert (res.status is Perfection.PERFECT) == expected
        if not expected:
            target = complement(g) if res.in_complement else g
            assert is_induced_cycle(target, res.witness)


def test_perfection_examples():
    assert is_perfect(Graph.empty(4)).status is Perfection.PERFECT
    assert is_perfect(difference_graph(build_group("Z(30)"))).status is Perfection.PERFECT
    res = is_perfect(difference_graph(build_group("Z(60)")))
    assert res.status is Perfection.IMPERFECT and len(res.witness) == 5
    assert is_perfect(Graph.cycle(7), budget=1).status is Perfection.UNKNOWN


@pytest.mark.parametrize("spec", ["Z(30)", "Z(60)", "Z(2) x Z(2) x Z(15)", "Z(36)", "Z(3) x Q(16)"])
def test_reduction_does_not_change_perfection(spec):
    g = difference_graph(build_group(spec))
    assert g.n <= 60
    assert is_perfect(g, reduce=True).status == is_perfect(g, reduce=False).status


# -- cliques -------------------------------------------------------------------

def test_clique_examples():
    assert len(max_clique(Graph.complete(5))) == 5
    assert len(max_clique(Graph.cycle(5))) == 2
    g = difference_graph(build_group("Z(30)"))
    clique = max_clique(g).vertices
    assert sorted(g.orders[v] for v in clique) == [6, 10, 15]


@given(graphs(max_n=12))
def test_clique_matches_networkx(g):
    expected = max((len(c) for c in nx.find_cliques(nxg(g))), default=0)
    assert len(max_clique(g)) == expected
    assert clique_number(g) == expected


def test_clique_budget_reports_partial():
    g = Graph.from_edges(30, [(i, j) for i in range(30) for j in range(i + 1, 30) if (i * j) % 7 != 3])
    with pytest.raises(BudgetExceeded) as info:
        max_clique(g, budget=2)
    assert info.value.partial is not None and not info.value.partial.exact


def test_clique_vertex_cap():
    with pytest.raises(PreconditionFailed):
        max_clique(Graph.empty(10), vertex_cap=5)


# -- group-level helpers ---------------------------------------------------------

@pytest.mark.parametrize("spec", ["Z(60)", "Z(3) x Q(16)", "D(24)", "Sym(4)", "Z(2) x Z(4) x Z(3)"])
def test_weighted_diameter_matches_element_level(spec):
    lat = CyclicLattice(build_group(spec))
    expected = analyze(difference_graph(lat)).diameter
    assert weighted_diameter(class_graph(lat, "diff")) == (expected if difference_graph(lat).n else 0)


@pytest.mark.parametrize("spec", ["Z(60)", "Q(16)", "Sym(4)", "SL(2,3)"])
def test_class_degrees_match_element_degrees(spec):
    lat = CyclicLattice(build_group(spec))
    g = element_graph(lat, "diff_undeleted")
    for c, d in zip(lat.classes, class_degrees(lat)):
        assert all(g.degree(x) == d for x in c.members)


def test_isolated_vertices():
    assert {e.index for e in isolated_vertices_of_difference(build_group("Z(15)"))} == set(range(15))
    Q = build_group("Q(32)")
    assert {e.index for e in isolated_vertices_of_difference(Q)} == {0, Q.unique_involution()}
    iso = {e.index for e in isolated_vertices_of_difference(build_group("Z(12)"))}
    assert iso == {0, 1, 5, 7, 11, 4, 6, 8}


@pytest.mark.parametrize("spec", ["Q(8)", "SL(2,3)", "Z(5) x Q(8)"])
def test_even_order_clique(spec):
    assert even_order_clique_check(build_group(spec))


def test_even_order_clique_needs_unique_involution():
    with pytest.raises(PreconditionFailed):
        even_order_clique_check(build_group("Z(2) x Z(2)"))
