import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hypergen import HypergeomParams, make_params

settings.register_profile("exact", deadline=None, max_examples=60)
settings.load_profile("exact")


def grid_triples(n_max: int) -> list[HypergeomParams]:
    """Every valid (N, K, n) with N <= n_max."""
    return [
        make_params(N, K, n)
        for N in range(n_max + 1)
        for K in range(N + 1)
        for n in range(N + 1)
    ]


@st.composite
def param_triples(draw, max_N: int = 40) -> HypergeomParams:
    N = draw(st.integers(0, max_N))
    K = draw(st.integers(0, N))
    n = draw(st.integers(0, N))
    return make_params(N, K, n)


@pytest.fixture(scope="session")
def small_grid() -> list[HypergeomParams]:
    return grid_triples(8)


# Admitted branch tags per (n, K) cell for N=4, derived by hand from the
# validity ranges: lower branch and its restatement iff n <= N-K, upper
# branch and its restatement iff n >= N-K, the 1/z rewrites iff n >= K
# (Cor1b) and n <= K (Cor2a).  The n=K=2 cell carries all four rewrites.
REGIONS_4_ROWS = [
    "0,0,ThmA|Cor1a|Cor1b|Cor2a",
    "0,1,ThmA|Cor1a|Cor2a",
    "0,2,ThmA|Cor1a|Cor2a",
    "0,3,ThmA|Cor1a|Cor2a",
    "0,4,ThmA|ThmB|Cor1a|Cor2a|Cor2b",
    "1,0,ThmA|Cor1a|Cor1b",
    "1,1,ThmA|Cor1a|Cor1b|Cor2a",
    "1,2,ThmA|Cor1a|Cor2a",
    "1,3,ThmA|ThmB|Cor1a|Cor2a|Cor2b",
    "1,4,ThmB|Cor2a|Cor2b",
    "2,0,ThmA|Cor1a|Cor1b",
    "2,1,ThmA|Cor1a|Cor1b",
    "2,2,ThmA|ThmB|Cor1a|Cor1b|Cor2a|Cor2b",
    "2,3,ThmB|Cor2a|Cor2b",
    "2,4,ThmB|Cor2a|Cor2b",
    "3,0,ThmA|Cor1a|Cor1b",
    "3,1,ThmA|ThmB|Cor1a|Cor1b|Cor2b",
    "3,2,ThmB|Cor1b|Cor2b",
    "3,3,ThmB|Cor1b|Cor2a|Cor2b",
    "3,4,ThmB|Cor2a|Cor2b",
    "4,0,ThmA|ThmB|Cor1a|Cor1b|Cor2b",
    "4,1,ThmB|Cor1b|Cor2b",
    "4,2,ThmB|Cor1b|Cor2b",
    "4,3,ThmB|Cor1b|Cor2b",
    "4,4,ThmB|Cor1b|Cor2a|Cor2b",
]
