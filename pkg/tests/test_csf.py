from collections import Counter
from itertools import product

import pytest
from hypothesis import given

from chromhom.csf import (
    SizeBoundError,
    chromatic_polynomial_from_csf,
    chromatic_symmetric_function,
    csf_to_schur,
    schur_to_monomial,
)
from chromhom.graphs import Graph, star
from chromhom.partitions import Partition, partitions_of

from conftest import graphs

P = Partition


def brute_force_csf(G):
    """Monomial coefficients by enumerating every coloring with colors 1..n."""
    out = {}
    for mu in partitions_of(G.n):
        target = mu.parts + (0,) * (G.n - len(mu))
        count = 0
        for col in product(range(G.n), repeat=G.n):
            if any(col[u - 1] == col[v - 1] for u, v in G.edges):
                continue
            c = Counter(col)
            if tuple(c[i] for i in range(G.n)) == target:
                count += 1
        if count:
            out[mu] = count
    return out


def chromatic_polynomial(G, k):
    """Deletion-contraction."""
    if not G.edges:
        return k**G.n
    (u, v), rest = G.edges[0], G.edges[1:]
    deleted = Graph(G.n, rest)
    # contract v into u, then renumber to 1..n-1
    relabel = {x: (u if x == v else x) for x in range(1, G.n + 1)}
    merged = {tuple(sorted((relabel[a], relabel[b]))) for a, b in rest}
    merged = {e for e in merged if e[0] != e[1]}
    keep = [x for x in range(1, G.n + 1) if x != v]
    idx = {x: i + 1 for i, x in enumerate(keep)}
    contracted = Graph(G.n - 1, tuple((idx[a], idx[b]) for a, b in merged))
    return chromatic_polynomial(deleted, k) - chromatic_polynomial(contracted, k)


def test_small_cases():
    assert chromatic_symmetric_function(Graph(1)).as_dict() == {P((1,)): 1}
    assert chromatic_symmetric_function(Graph(2, ((1, 2),))).as_dict() == {P((1, 1)): 2}
    assert chromatic_symmetric_function(star(3)).as_dict() == {P((2, 1)): 1, P((1, 1, 1)): 6}


def test_edgeless_is_power_of_p1():
    # X of the empty graph is p_1^n = sum over mu of multinomial(n; mu) m_mu
    e = chromatic_symmetric_function(Graph(3))
    assert e.as_dict() == {P((3,)): 1, P((2, 1)): 3, P((1, 1, 1)): 6}


@given(graphs(min_n=1, max_n=4))
def test_matches_brute_force(G):
    assert chromatic_symmetric_function(G).as_dict() == brute_force_csf(G)


@given(graphs(min_n=1, max_n=5))
def test_chromatic_polynomial(G):
    e = chromatic_symmetric_function(G)
    for k in range(0, 5):
        assert chromatic_polynomial_from_csf(e, k) == chromatic_polynomial(G, k)


@given(graphs(min_n=1, max_n=6))
def test_schur_round_trip(G):
    mono = chromatic_symmetric_function(G)
    assert schur_to_monomial(csf_to_schur(mono)) == mono


def test_star3_schur():
    assert csf_to_schur(chromatic_symmetric_function(star(3))).as_dict() == {P((2, 1)): 1, P((1, 1, 1)): 4}


def test_size_bound():
    with pytest.raises(SizeBoundError):
        chromatic_symmetric_function(star(9))
