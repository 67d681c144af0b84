import numpy as np
from hypothesis import given, strategies as st

from chromhom.chain import tabloids_of_shape
from chromhom.linalg import RankBackend, SparseMatrix
from chromhom.partitions import Partition, partitions_of
from chromhom.tableaux import kostka
from chromhom.young import OrbitData, _split_point, image_multiplicities


def pairs(max_n=6):
    return st.integers(1, max_n).flatmap(
        lambda n: st.tuples(st.sampled_from(partitions_of(n)), st.sampled_from(partitions_of(n)))
    )


def module(nu):
    words = np.array([t.word() for t in tabloids_of_shape(nu)], dtype=np.int64)
    return words, np.zeros(len(words), dtype=np.int64)


@given(pairs())
def test_orbit_counts(pair):
    nu, mu = pair
    words, ids = module(nu)
    orbits = OrbitData(words, ids, mu)
    lams = partitions_of(nu.n)
    assert orbits.count == sum(kostka(lam, nu) * kostka(lam, mu) for lam in lams)
    assert orbits.alive_count == sum(kostka(lam, nu) * kostka(lam.conjugate(), mu) for lam in lams)
    assert orbits.is_rep.sum() == orbits.count


@given(st.integers(1, 6).flatmap(lambda n: st.sampled_from(partitions_of(n))))
def test_identity_decomposes_permutation_module(nu):
    words, ids = module(nu)
    d = SparseMatrix.identity(len(words))
    got = image_multiplicities(d, words, ids, words, ids, nu.n, RankBackend("exact"))
    assert got == {lam: kostka(lam, nu) for lam in partitions_of(nu.n)}


def test_zero_map():
    words, ids = module(Partition((2, 1)))
    got = image_multiplicities(SparseMatrix.zeros(3, 3), words, ids, words, ids, 3)
    assert set(got.values()) == {0}


def test_split_point_in_range():
    for n in range(1, 9):
        assert 0 <= _split_point(n) <= len(partitions_of(n))
