import pytest
from hypothesis import given

from chibound.bits import iter_bits
from chibound.decomposition import (EMPTY_N1, PRISM, SINGLE_PART, TWO_PART, clique_layering,
                                    layer_components, verify_lemma31)
from chibound.errors import ClassViolation
from chibound.gen import PLANTED, PLANTED_EXPECTED, planted_instance
from chibound.graph import bfs_layers, build_graph, complete, cycle, is_connected, named_graph, prism
from chibound.oracle import clique_number

from conftest import class_samples

K4_EDGES = [(a, b) for a in range(4) for b in range(a + 1, 4)]


def test_prism_from_one_side():
    L = clique_layering(prism(4), (0, 1, 2, 3))
    assert L.case == PRISM and L.depth == 1
    assert all(len(L.W_part(i)) == 1 for i in range(1, 5))
    assert verify_lemma31(prism(4), L).ok


def test_k4_with_pendant():
    G = build_graph(5, K4_EDGES + [(0, 4)])
    L = clique_layering(G)
    assert L.case_label() == "single_part(1)"
    assert L.N(1) == (4,) and L.K[0] == 0


def test_k3_with_adjacent_pendants():
    L = clique_layering(planted_instance("lemma31_case(two_part)"))
    assert L.case == TWO_PART and L.W_part(1) == (3,) and L.W_part(2) == (4,)


def test_canonical_order_puts_nonempty_parts_first():
    # pendant on the last clique vertex becomes W_1
    G = build_graph(4, [(0, 1), (0, 2), (1, 2), (2, 3)])
    L = clique_layering(G)
    assert L.K == (2, 0, 1) and L.W_part(1) == (3,)


def test_clique_alone_is_empty_n1():
    L = clique_layering(complete(5))
    assert L.case == EMPTY_N1 and L.is_prism and L.depth == 0


@pytest.mark.parametrize("kind", sorted(PLANTED))
def test_planted_cases(kind):
    G = planted_instance(kind)
    L = clique_layering(G)
    assert L.case_label() == PLANTED_EXPECTED[kind][0]
    assert verify_lemma31(G, L).ok


def test_preconditions_rejected():
    with pytest.raises(ClassViolation) as info:
        clique_layering(named_graph("bull"))
    assert info.value.pattern == "bull"
    with pytest.raises(ValueError, match="connected"):
        clique_layering(build_graph(4, [(0, 1), (1, 2), (0, 2)]))
    with pytest.raises(ValueError, match="omega > 2"):
        clique_layering(cycle(5))
    with pytest.raises(ValueError, match="maximum"):
        clique_layering(build_graph(5, K4_EDGES + [(0, 4)]), (0, 1, 2))


def test_planted_diamond_fails_precondition():
    G = build_graph(6, K4_EDGES + [(0, 4), (1, 4), (4, 5)])
    L = clique_layering(G, check=False)
    rep = verify_lemma31(G, L)
    assert not rep.ok and "precondition" in rep.failures
    assert rep.notes["precondition"] == "induced diamond"


@given(class_samples(n_max=16))
def test_layering_invariants_on_samples(G):
    if G.n == 0 or clique_number(G) <= 2:
        return
    if not is_connected(G):
        return
    L = clique_layering(G)
    assert L.case in (PRISM, EMPTY_N1, TWO_PART, SINGLE_PART)
    assert verify_lemma31(G, L).ok
    dist = bfs_layers(G, L.K)
    for i, layer in enumerate(L.layer_masks):
        assert all(dist[v] == i for v in iter_bits(layer))
    for i in range(2, L.depth + 1):
        for comp, has_tri in layer_components(G, L, i):
            if has_tri:
                assert G.is_clique(comp)


def test_to_dict_shape():
    d = clique_layering(planted_instance("p7_layers")).to_dict()
    assert d["K"] == [0, 1, 2, 3] and d["layer_sizes"] == [1, 1, 1, 3]
    assert d["W"]["1"] == [4] and d["case"] == "single_part(1)"
