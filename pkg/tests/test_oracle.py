from itertools import combinations, product

import pytest
from hypothesis import given

from chibound.errors import DeskLimitExceeded
from chibound.graph import build_graph, complete, cycle, grotzsch, named_graph, path, prism
from chibound.oracle import (Coloring, chromatic_number_exact, clique_number, degeneracy_order, dsatur,
                             is_k_colorable, max_clique, verify_coloring)

from conftest import graphs


def brute_chi(G):
    for k in range(G.n + 1):
        for colors in product(range(k), repeat=G.n):
            if all(colors[u] != colors[v] for u, v in G.edges()):
                return k
    return G.n


def brute_omega(G):
    for size in range(G.n, 0, -1):
        if any(G.is_clique(sum(1 << v for v in S)) for S in combinations(range(G.n), size)):
            return size
    return 0


@pytest.mark.parametrize("name, chi", [
    ("complete(1)", 1), ("complete(6)", 6), ("cycle(5)", 3), ("cycle(8)", 2), ("cycle(9)", 3),
    ("grotzsch", 4), ("prism(5)", 5), ("bull", 3), ("diamond", 3), ("paw", 3),
    ("complete_bipartite(3,3)", 2), ("path(1)", 1),
])
def test_hand_values(name, chi):
    G = named_graph(name)
    k, c = chromatic_number_exact(G)
    assert k == chi
    assert verify_coloring(G, c).ok and c.palette == k


def test_clique_numbers():
    assert clique_number(grotzsch()) == 2
    assert clique_number(prism(4)) == 4
    assert max_clique(named_graph("bull")) == (0, 1, 2)
    assert clique_number(build_graph(0, [])) == 0


@given(graphs(max_n=7))
def test_exact_matches_brute_force(G):
    k, c = chromatic_number_exact(G)
    assert k == brute_chi(G)
    assert verify_coloring(G, c).ok


@given(graphs(max_n=9))
def test_clique_matches_brute_force(G):
    assert clique_number(G) == brute_omega(G)
    assert G.is_clique(sum(1 << v for v in max_clique(G)))


@given(graphs(max_n=12))
def test_dsatur_is_proper_and_bounded(G):
    col = dsatur(G)
    assert verify_coloring(G, Coloring.from_colors(col, G.n)).ok
    assert max(col.values(), default=0) <= G.max_degree() + 1


def test_dsatur_two_colors_bipartite():
    assert max(dsatur(cycle(10)).values()) == 2


def test_degeneracy_order_is_permutation():
    order = degeneracy_order(grotzsch())
    assert sorted(order) == list(range(11))


def test_verify_reports_conflicts_and_gaps():
    check = verify_coloring(path(3), [1, 1, 0])
    assert check.monochromatic_edges == [(0, 1)]
    assert check.uncolored == [2]
    assert not check


def test_coloring_rejects_overfull_palette():
    with pytest.raises(ValueError):
        Coloring((1, 3), 2)


def test_desk_limit_and_override(monkeypatch):
    with pytest.raises(DeskLimitExceeded, match="CHIBOUND_DESK_LIMIT"):
        chromatic_number_exact(cycle(12), limit=10)
    monkeypatch.setenv("CHIBOUND_DESK_LIMIT", "5")
    with pytest.raises(DeskLimitExceeded):
        chromatic_number_exact(cycle(6))
    monkeypatch.setenv("CHIBOUND_DESK_LIMIT", "50")
    assert chromatic_number_exact(cycle(45))[0] == 3


def test_is_k_colorable():
    assert is_k_colorable(grotzsch(), 4)
    assert not is_k_colorable(grotzsch(), 3)
    assert not is_k_colorable(complete(5), 4)
