import pytest
from hypothesis import given

from chibound.coloring import (TriangleFreeColorer, color_bull_diamond, color_dispatch, color_p5, color_p6,
                               color_p7, color_prism_case, color_triangle_free, extend_into_clique_component)
from chibound.decomposition import clique_layering
from chibound.errors import BudgetExceeded, ClassViolation, StructureError
from chibound.gen import PLANTED, PLANTED_EXPECTED, extension_partial, planted_instance
from chibound.graph import build_graph, complete, complete_bipartite, cycle, grotzsch, named_graph, path, prism
from chibound.oracle import Coloring, chromatic_number_exact, clique_number, verify_coloring

from conftest import class_samples

EXACT, DSATUR = TriangleFreeColorer("exact"), TriangleFreeColorer("dsatur_checked")


def proper(G, c):
    return verify_coloring(G, c).ok and c.palette <= c.certificate.claimed_bound


def test_triangle_free_examples():
    assert color_triangle_free(cycle(5), EXACT).palette == 3
    assert color_triangle_free(grotzsch(), EXACT).palette == 4
    for c in (EXACT, DSATUR):
        assert color_triangle_free(complete_bipartite(3, 3), c).palette == 2
    with pytest.raises(ClassViolation):
        color_triangle_free(complete(3))


def test_budget_exceeded_and_dsatur_fallback():
    with pytest.raises(BudgetExceeded):
        color_triangle_free(grotzsch(), TriangleFreeColorer("exact", 3))
    c = color_triangle_free(grotzsch(), TriangleFreeColorer("dsatur", 4))
    assert c.palette <= 4 and verify_coloring(grotzsch(), c).ok


def test_prism_colorer():
    G = prism(3)
    c = color_prism_case(G, clique_layering(G))
    assert c.assignment == (1, 2, 3, 2, 3, 1)
    c = color_prism_case(complete(4), clique_layering(complete(4)))
    assert c.palette == 4
    G, _ = prism(4).induced_subgraph(range(7))
    c = color_prism_case(G, clique_layering(G))
    assert c.palette == 4 and verify_coloring(G, c).ok
    with pytest.raises(ValueError):
        color_prism_case(*(lambda H: (H, clique_layering(H)))(planted_instance("p6_case1")))


def test_bull_diamond_examples():
    c = color_bull_diamond(grotzsch())
    assert c.palette == 4 and proper(grotzsch(), c)
    c = color_bull_diamond(prism(5))
    assert c.palette == 5 and c.certificate.theorem == "thm32"
    assert c.certificate.parts[0].theorem == "prism"
    with pytest.raises(ClassViolation):
        color_bull_diamond(named_graph("diamond"))


def test_p5_examples():
    c = color_p5(cycle(5))
    assert c.palette == 3 and c.certificate.theorem == "cor_p5" and c.certificate.claimed_bound == 3
    assert color_p5(complete(4)).palette == 4
    with pytest.raises(ClassViolation) as info:
        color_p5(path(5))
    assert info.value.pattern == "P5"


def test_p6_examples():
    c = color_p6(grotzsch())
    assert c.palette <= 4 and c.certificate.theorem == "cor_p6_omega2"
    assert color_p6(prism(4)).palette == 4
    for kind in ("p6_case1", "p6_case2"):
        G = planted_instance(kind)
        c = color_p6(G)
        assert c.palette == 3 and c.certificate.theorem == "thm_p6_omega3" and proper(G, c)


def test_p6_case2_degree_two_vertex_gets_color_three():
    c = color_p6(planted_instance("p6_case2"))
    assert c.assignment[5] == 3 and c.assignment[3] == 2 and c.assignment[4] == 1


def test_p7_examples():
    c = color_p7(cycle(7))
    assert c.palette <= 5 and chromatic_number_exact(cycle(7))[0] == 3
    assert color_p7(prism(8)).palette == 8
    G = planted_instance("p7_layers")
    c = color_p7(G)
    assert proper(G, c) and c.certificate.claimed_bound == 7


def test_dispatch_routes():
    assert color_dispatch(cycle(5)).certificate.theorem == "cor_p5"
    c = color_dispatch(grotzsch())
    assert c.certificate.theorem == "cor_p6_omega2" and c.palette <= 4
    # induced P7 present: general colorer with bound max{2k, omega}
    c = color_dispatch(path(8))
    assert c.certificate.theorem == "thm32" and c.certificate.claimed_bound == 4


def test_disconnected_graph_takes_max_over_components():
    G = build_graph(9, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (6, 7), (7, 3)])
    c = color_dispatch(G)
    assert c.palette == 3 and len(c.certificate.parts) == 3 and verify_coloring(G, c).ok


@pytest.mark.parametrize("kind", sorted(PLANTED))
def test_planted_palettes(kind):
    G = planted_instance(kind)
    c = color_bull_diamond(G)
    assert proper(G, c) and c.palette == PLANTED_EXPECTED[kind][1]


# -- extension branches -------------------------------------------------------------

def _clique_edges(vs):
    return [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]]


def test_extension_single_attachment_is_greedy():
    # K_4 = {0..3}; W_1 = {4}; triangle {5,6,7} in N_2 whose only attachment is 4
    G = build_graph(8, _clique_edges([0, 1, 2, 3]) + _clique_edges([4, 5, 6, 7]) + [(0, 4)])
    L = clique_layering(G)
    trace = []
    c = extend_into_clique_component(Coloring((1, 2, 3, 4, 2, 0, 0, 0), 4), (5, 6, 7), L, G, trace)
    assert trace == [("greedy", (5, 6, 7))] and verify_coloring(G, c).ok


def test_extension_common_edge_is_greedy():
    # K_5 = {0..4}; W_1 = {5}, W_2 = {6}; N_2 edge {7, 8}; triangle {9,10,11} in N_3 joined to 7 and 8
    edges = _clique_edges([0, 1, 2, 3, 4]) + _clique_edges([7, 8, 9, 10, 11])
    edges += [(0, 5), (1, 6), (5, 6), (5, 7), (6, 8)]
    G = build_graph(12, edges)
    L = clique_layering(G)
    assert L.case == "two_part" and L.N(3) == (9, 10, 11)
    trace = []
    partial = Coloring((1, 2, 3, 4, 5, 2, 1, 3, 4, 0, 0, 0), 5)
    c = extend_into_clique_component(partial, (9, 10, 11), L, G, trace)
    assert trace == [("greedy", (9, 10, 11))] and verify_coloring(G, c).ok


def test_extension_recolor_branch():
    G = planted_instance("extension_branch")
    L = clique_layering(G)
    trace = []
    c = extend_into_clique_component(Coloring(extension_partial(), 4), (7, 8, 9), L, G, trace)
    assert trace == [("recolor", (7, 8, 9))]
    assert c.assignment[9] == c.assignment[0] == 1
    assert verify_coloring(G, c).ok


def _out_of_class_instance():
    # triangle {6,7,8} in N_2 under K_3 = {0,1,2}; W_1 = {3,4,5}; 4 sees all of it
    edges = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5), (6, 7), (6, 8), (7, 8),
             (6, 3), (6, 4), (7, 4), (8, 4), (8, 5)]
    return build_graph(9, edges)


def test_extension_exhaustive_fallback():
    G = _out_of_class_instance()
    L = clique_layering(G, (0, 1, 2), check=False)
    trace = []
    c = extend_into_clique_component(Coloring((1, 2, 3, 2, 3, 4, 0, 0, 0), 4), (6, 7, 8), L, G, trace)
    assert trace == [("fallback", (6, 7, 8))] and verify_coloring(G, c).ok


def test_extension_impossible_raises():
    G = _out_of_class_instance()
    L = clique_layering(G, (0, 1, 2), check=False)
    with pytest.raises(StructureError):
        extend_into_clique_component(Coloring((1, 2, 3, 2, 3, 2, 0, 0, 0), 3), (6, 7, 8), L, G)


def test_extension_preconditions():
    G = planted_instance("extension_branch")
    L = clique_layering(G)
    with pytest.raises(ValueError, match="clique"):
        extend_into_clique_component(Coloring(extension_partial(), 4), (7, 8), L, G)
    with pytest.raises(ValueError, match="not fully colored"):
        extend_into_clique_component(Coloring((1, 2, 3, 4, 2, 3, 0, 0, 0, 0), 4), (7, 8, 9), L, G)


# -- properties -----------------------------------------------------------------------

@given(class_samples(n_max=16))
def test_all_colorers_proper_and_sound(G):
    chi = chromatic_number_exact(G)[0]
    for colorer in (color_bull_diamond, color_dispatch):
        for tf in (EXACT, DSATUR):
            c = colorer(G, tf)
            assert proper(G, c) and chi <= c.palette


@given(class_samples(("P6", "bull", "diamond"), n_max=16))
def test_p6_is_omega_colorable(G):
    c = color_p6(G)
    omega = clique_number(G)
    assert verify_coloring(G, c).ok
    assert c.palette == omega if omega >= 3 else c.palette <= 4


@given(class_samples(("P6", "bull", "diamond"), n_max=14))
def test_relabel_invariance(G):
    perm = list(range(G.n))[::-1]
    H = G.relabel(perm)
    for colorer in (color_p6, color_p5 if clique_number(G) > 2 else None):
        if colorer is None:
            continue
        try:
            a = colorer(G)
        except ClassViolation:
            continue
        assert colorer(H).palette == a.palette
    assert chromatic_number_exact(H)[0] == chromatic_number_exact(G)[0]


def test_p6_case2_adjacent_vertices_missing_same_side():
    # 5 and 6 are adjacent, both see W_1 = {3} only; one side of the edge takes color 3
    G = build_graph(7, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (3, 4), (3, 5), (3, 6), (5, 6)])
    c = color_p6(G)
    assert c.palette == 3 and verify_coloring(G, c).ok
    assert {c.assignment[5], c.assignment[6]} == {1, 3}
