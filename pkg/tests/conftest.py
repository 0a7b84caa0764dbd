import pytest

from gpar.census import copies_for
from gpar.hypergraph import build, split_dead
from gpar.petersen import PetersenParams, generate


def core_hypergraph(n, k, d):
    """Copy hypergraph of P(n,k) after removing copy-free edges."""
    p = PetersenParams(n, k)
    split = split_dead(generate(p), copies_for(p, d))
    return build(split.graph, split.psi)


@pytest.fixture
def hyper():
    return core_hypergraph
