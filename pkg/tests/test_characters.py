from math import factorial

import pytest
from hypothesis import given, strategies as st

from chromhom.characters import character, class_size, cycle_type, z_factor
from chromhom.partitions import Partition, partitions_of
from chromhom.tableaux import f_syt

from conftest import partitions

P = Partition


@given(partitions(max_n=8, min_n=1))
def test_identity_class_gives_dimension(lam):
    assert character(lam, (1,) * lam.n) == f_syt(lam)


@given(partitions(max_n=8, min_n=1))
def test_trivial_and_sign(lam):
    n = lam.n
    assert character(P((n,)), lam) == 1
    # sign of a permutation with cycle type lam is (-1)^(n - #cycles)
    assert character(P((1,) * n), lam) == (-1) ** (n - len(lam))


@given(partitions(max_n=7, min_n=1), st.data())
def test_conjugate_twists_by_sign(lam, data):
    mu = data.draw(st.sampled_from(partitions_of(lam.n)))
    assert character(lam.conjugate(), mu) == (-1) ** (lam.n - len(mu)) * character(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
def test_row_orthogonality(n):
    ps = partitions_of(n)
    for a in ps:
        for b in ps:
            s = sum(class_size(mu) * character(a, mu) * character(b, mu) for mu in ps)
            assert s == (factorial(n) if a == b else 0)


@pytest.mark.parametrize("n", range(1, 7))
def test_column_orthogonality(n):
    ps = partitions_of(n)
    for mu in ps:
        for nu in ps:
            s = sum(character(lam, mu) * character(lam, nu) for lam in ps)
            assert s == (z_factor(mu) if mu == nu else 0)


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum_to_order(n):
    assert sum(class_size(mu) for mu in partitions_of(n)) == factorial(n)


def test_known_values():
    assert character(P((2, 1)), (3,)) == -1
    assert character(P((2, 2)), (2, 2)) == 2
    assert character(P((3, 2)), (2, 2, 1)) == 1
    assert character(P((3, 1, 1)), (5,)) == 1
    assert class_size(P((2, 2))) == 3


def test_cycle_type():
    assert cycle_type([2, 3, 1, 5, 4]) == P((3, 2))
    assert cycle_type([0, 1, 2]) == P((1, 1, 1))
