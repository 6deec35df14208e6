from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from ggraph.analysis import clique_number
from ggraph.divisors import (
    Divisor,
    DivisorFamily,
    all_divisors,
    classify_family,
    embed_in_cyclic,
    graph_to_sperner,
    omega_via_divisors,
    symbolic_diff_adjacent,
)
from ggraph.errors import GroundSetTooLarge, TooManyDivisors
from ggraph.graphs import Graph, difference_graph, element_graph, intersection_power_graph, power_graph
from ggraph.groups import cyclic
from ggraph.lattice import CyclicLattice
from ggraph.numtheory import totient


def div(d, n):
    return Divisor.of(d, n)


@pytest.mark.parametrize("a,b,n,expected", [(6, 10, 30, True), (4, 12, 12, False), (4, 15, 60, False)])
def test_symbolic_adjacency_examples(a, b, n, expected):
    assert symbolic_diff_adjacent(div(a, n), div(b, n)) == expected


def test_classify_examples():
    f = DivisorFamily.of(12, [2, 4, 12]).flags
    assert f.is_chain and f.is_intersecting and not f.is_sperner
    f = DivisorFamily.of(30, [6, 10, 15]).flags
    assert f.is_intersecting_sperner and not f.is_chain
    f = DivisorFamily.of(6, [2, 3]).flags
    assert f.is_sperner and not f.is_intersecting


def test_family_weight_is_phi_sum():
    fam = DivisorFamily.of(60, [4, 6, 15])
    assert fam.weight == totient(4) + totient(6) + totient(15)


@given(st.integers(1, 5000))
def test_divisor_values_and_phi(n):
    divs = all_divisors(n)
    assert [d.value for d in divs] == [d for d in range(1, n + 1) if n % d == 0]
    assert sum(d.phi() for d in divs) == n


@given(st.integers(1, 400), st.data())
def test_divisibility_and_gcd(n, data):
    divs = all_divisors(n)
    a = data.draw(st.sampled_from(divs))
    b = data.draw(st.sampled_from(divs))
    assert a.divides(b) == (b.value % a.value == 0)
    assert a.shares_prime(b) == (gcd(a.value, b.value) > 1)


def test_divisor_limits():
    with pytest.raises(TooManyDivisors):
        all_divisors(10**13)
    with pytest.raises(TooManyDivisors):
        all_divisors(2 * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41)


@pytest.mark.parametrize("n", [8, 27, 49, 64])
def test_power_omega_of_prime_power_is_complete(n):
    assert omega_via_divisors(n, "power")[0].value == n


def test_diff_omega_examples():
    card, weight = omega_via_divisors(30, "diff")
    assert (card.value, card.witness) == (3, [6, 10, 15])
    assert weight.value == 14
    card, _ = omega_via_divisors(12, "diff")
    assert (card.value, card.witness) == (2, [4, 6])


@pytest.mark.parametrize("n", [12, 18, 24, 30, 36, 48, 60, 72, 90, 210])
def test_omega_matches_exact_clique(n):
    lat = CyclicLattice(cyclic(n))
    assert omega_via_divisors(n, "power")[0].value == clique_number(power_graph(lat))
    assert omega_via_divisors(n, "ipg")[0].value == clique_number(intersection_power_graph(lat))
    dg = difference_graph(lat)
    assert omega_via_divisors(n, "diff")[0].value == (clique_number(dg) if dg.n else 1)


def test_omega_power_witness_is_chain():
    r = omega_via_divisors(360, "power")[0]
    assert classify_family(div(d, 360) for d in r.witness).is_chain


@pytest.mark.parametrize("n", [60, 100, 210, 360, 720, 1000])
def test_symbolic_adjacency_matches_element_graph(n):
    g = element_graph(CyclicLattice(cyclic(n)), "diff_undeleted")
    rep = {d: (n // d) % n for d in range(1, n + 1) if n % d == 0}
    for a, b in combinations(rep, 2):
        assert symbolic_diff_adjacent(div(a, n), div(b, n)) == g.adjacent(rep[a], rep[b])


def test_sperner_construction_examples():
    fam = graph_to_sperner(Graph.complete(2))
    assert len(fam.ground_set) == 3
    assert fam.sets[0] & fam.sets[1]
    fam = graph_to_sperner(Graph.empty(2))
    assert fam.sets == (frozenset({("v", 0)}), frozenset({("v", 1)}))
    fam = graph_to_sperner(Graph.complete(3))
    assert all(len(s) == 3 for s in fam.sets)
    assert all(len(a & b) == 1 for a, b in combinations(fam.sets, 2))


def test_embedding_examples():
    emb = embed_in_cyclic(Graph.complete(2))
    assert emb.prime_list == [2, 3, 5]
    assert [d.value for d in emb.divisors] == [10, 15] and emb.verified
    emb = embed_in_cyclic(Graph.empty(2))
    assert [d.value for d in emb.divisors] == [2, 3] and emb.verified
    emb = embed_in_cyclic(Graph.path(4))
    assert len(emb.primes) == 7 and len(emb.divisors) == 4 and emb.verified
    emb = embed_in_cyclic(Graph.empty(1))
    assert len(emb.divisors) == 1 and emb.verified


def test_embedding_ground_set_limit():
    with pytest.raises(GroundSetTooLarge):
        embed_in_cyclic(Graph.complete(11))


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return Graph.from_edges(n, [p for p in pairs if draw(st.booleans())])


@given(graphs())
def test_family_intersection_graph_is_the_input(g):
    fam = graph_to_sperner(g)
    assert fam.is_sperner()
    assert fam.intersection_graph().rows == g.rows


@settings(max_examples=200)
@given(graphs())
def test_every_small_graph_embeds(g):
    assert embed_in_cyclic(g).verified
