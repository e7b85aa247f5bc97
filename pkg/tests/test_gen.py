import pytest

from chibound.gen import (PLANTED, SamplerSpec, SamplingFailed, SplitMix64, forbidden_count, planted_instance,
                          repair, sample, sample_many)
from chibound.graph import build_graph, is_connected
from chibound.recognition import classify, count_triangles, find_pattern


def test_splitmix64_reference_values():
    rng = SplitMix64(0)
    assert [rng.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]
    u = SplitMix64(7).random()
    assert 0.0 <= u < 1.0


def test_empty_graph_at_density_zero():
    for fam in (("bull",), ("triangle", "P5")):
        G = sample(SamplerSpec(10, 0.0, fam, seed=3))
        assert G.n == 10 and G.m == 0


def test_deterministic_double_run():
    spec = SamplerSpec(20, 0.3, ("bull", "diamond"), seed=1)
    a, b = sample(spec), sample(spec)
    assert a == b
    r = classify(a)
    assert r.bull_free and r.diamond_free


def test_triangle_free_sample():
    assert count_triangles(sample(SamplerSpec(15, 0.2, ("triangle",), seed=7))) == 0


def test_connect_retry_and_exhaustion():
    G = sample(SamplerSpec(12, 0.3, ("bull", "diamond"), seed=5, connect=True))
    assert is_connected(G)
    with pytest.raises(SamplingFailed, match="lower p or n"):
        sample(SamplerSpec(12, 0.0, ("triangle",), seed=5, connect=True, max_attempts=3))


def test_spec_validation():
    with pytest.raises(ValueError):
        SamplerSpec(0, 0.5)
    with pytest.raises(ValueError):
        SamplerSpec(5, 1.5)
    with pytest.raises(ValueError):
        SamplerSpec(5, 0.5, ("cow",))
    assert SamplerSpec(5, 0.5, "p5,BULL").family == ("P5", "bull")


FAMILIES = [("bull", "diamond"), ("triangle",), ("paw",), ("P5", "bull", "diamond"),
            ("P6", "bull", "diamond"), ("P7", "bull", "diamond")]


@pytest.mark.parametrize("family", FAMILIES)
def test_no_escapes(family):
    draws = 0
    for model in ("er", "blocks"):
        for seed in range(85):
            spec = SamplerSpec(3 + seed % 10, (0.1, 0.3, 0.5)[seed % 3], family, seed, clique=seed % 5,
                               model=model)
            G = sample(spec)
            draws += 1
            for name in family:
                assert find_pattern(G, name) is None
    assert draws == 170


def test_repair_deletes_one_edge_per_round():
    rng = SplitMix64(11)
    from chibound.gen import er_edges
    G = build_graph(12, er_edges(12, 0.5, rng))
    history = []
    out = repair(G, ("bull", "diamond"), history)
    assert out.m == G.m - len(history)
    assert len({e for _, _, e in history}) == len(history)


def _count_trajectory(G, family):
    counts = [forbidden_count(G, family)]
    history = []
    repair(G, family, history)
    edges = set(G.edges())
    for _, _, e in history:
        edges.discard(e)
        counts.append(forbidden_count(build_graph(G.n, edges), family))
    return counts


def test_triangle_count_never_increases_under_repair():
    from chibound.gen import er_edges
    for seed in range(20):
        G = build_graph(11, er_edges(11, 0.4, SplitMix64(seed)))
        counts = _count_trajectory(G, ("triangle",))
        assert all(a >= b for a, b in zip(counts, counts[1:]))
        assert counts[-1] == 0


def test_bull_diamond_count_can_increase_under_repair():
    # deleting an edge may create a new bull or diamond, so the count is not monotone
    from chibound.gen import er_edges
    rises = 0
    for seed in range(20):
        G = build_graph(11, er_edges(11, 0.4, SplitMix64(seed)))
        counts = _count_trajectory(G, ("bull", "diamond"))
        rises += sum(b > a for a, b in zip(counts, counts[1:]))
        assert counts[-1] == 0
    assert rises > 0


def test_sample_many_is_reproducible():
    a = sample_many((5, 10), 0.2, ("bull", "diamond"), 9, 5)
    b = sample_many((5, 10), 0.2, ("bull", "diamond"), 9, 5)
    assert a == b and all(is_connected(G) for G in a)


def test_planted_instances_known():
    assert set(PLANTED) == {"lemma31_case(two_part)", "lemma31_case(single_part)", "lemma31_case(prism)",
                            "extension_branch", "p6_case1", "p6_case2", "p7_layers"}
    assert planted_instance("lemma31_case( prism )").n == 6
    with pytest.raises(ValueError):
        planted_instance("nope")
    for kind in PLANTED:
        r = classify(planted_instance(kind))
        assert r.bull_free and r.diamond_free
    assert classify(planted_instance("p7_layers")).free_of_path(7)
    assert classify(planted_instance("p6_case1")).free_of_path(6)
