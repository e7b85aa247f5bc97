import pytest
from hypothesis import settings, strategies as st

from chibound.gen import SamplerSpec, sample
from chibound.graph import build_graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, keep in zip(pairs, chosen) if keep])


@st.composite
def class_samples(draw, family=("bull", "diamond"), n_max=14, model=None):
    n = draw(st.integers(3, n_max))
    seed = draw(st.integers(0, 2**64 - 1))
    p = draw(st.sampled_from([0.1, 0.2, 0.3]))
    m = model or draw(st.sampled_from(["er", "blocks"]))
    q = draw(st.integers(0, 5)) if m == "er" else draw(st.integers(2, 5))
    return sample(SamplerSpec(min(n, n_max), p, family, seed, max_attempts=5, clique=min(q, n), model=m))


@pytest.fixture
def rng_seeds():
    return list(range(30))
