from itertools import combinations, permutations
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from potcert.combinatorics import (
    complement,
    compose,
    enumerate_k_subsets,
    enumerate_permutations,
    esym,
    esym_all,
    esym_omit,
    identity,
    inverse,
    permutation_index,
    power_sum,
    sign,
    subset_index,
)
from potcert.errors import ResourceLimitError
from conftest import gaussians

perms4 = st.permutations(range(4)).map(tuple)


def test_permutation_enumeration():
    ps = enumerate_permutations(3)
    assert len(ps) == 6 and ps[0] == identity(3)
    assert enumerate_permutations(1) == ((0,),)
    assert list(enumerate_permutations(4)) == sorted(permutations(range(4)))


def test_permutation_cap():
    with pytest.raises(ResourceLimitError):
        enumerate_permutations(9)
    with pytest.raises(ResourceLimitError):
        enumerate_permutations(4, cap=3)


def test_permutation_index_inverts_enumeration():
    idx = permutation_index(4)
    assert all(idx[p] == k for k, p in enumerate(enumerate_permutations(4)))


@given(perms4, perms4, perms4)
def test_group_laws(p, q, r):
    assert compose(p, compose(q, r)) == compose(compose(p, q), r)
    assert compose(p, inverse(p)) == identity(4)
    assert compose(identity(4), p) == p
    assert sign(compose(p, q)) == sign(p) * sign(q)


def test_compose_applies_right_factor_first():
    p, q = (1, 2, 0), (1, 0, 2)
    assert compose(p, q) == tuple(p[q[i]] for i in range(3))


def test_sign_of_transposition():
    assert sign((1, 0, 2)) == -1
    assert sign((1, 2, 0)) == 1


def test_subsets():
    s = enumerate_k_subsets(5, 2)
    assert len(s) == 10 and s[0] == (0, 1)
    assert enumerate_k_subsets(3, 0) == ((),)
    assert enumerate_k_subsets(4, 4) == ((0, 1, 2, 3),)
    assert list(enumerate_k_subsets(6, 3)) == list(combinations(range(6), 3))
    assert len(subset_index(6, 3)) == comb(6, 3)
    assert complement((0, 2), 5) == (1, 3, 4)


@pytest.mark.parametrize("k", [-1, 6])
def test_subset_k_out_of_range(k):
    with pytest.raises(ValueError):
        enumerate_k_subsets(5, k)


def _esym_brute(xs, k):
    total = 0
    for sub in combinations(xs, k):
        term = 1
        for x in sub:
            term = term * x
        total = total + term
    return total


@given(st.lists(gaussians, min_size=0, max_size=6))
def test_esym_matches_brute_force(xs):
    es = esym_all(xs)
    for k in range(len(xs) + 1):
        assert es[k] == _esym_brute(xs, k) == esym(xs, k)


@given(st.lists(gaussians, min_size=1, max_size=5), st.data())
def test_esym_restriction_and_omission(xs, data):
    n = len(xs)
    i = data.draw(st.integers(min_value=0, max_value=n - 1))
    rest = [x for j, x in enumerate(xs) if j != i]
    for k in range(n + 1):
        assert esym_omit(xs, k, i) == _esym_brute(rest, k)
        assert esym(xs, k, subset=[j for j in range(n) if j != i]) == esym_omit(xs, k, i)


def test_esym_examples():
    assert esym([5, 7, 9], 0) == 1
    assert esym([2, 3, 4], 2, subset=(0, 1)) == 6
    assert esym([1, 2, 3], 4) == 0
    assert esym([1, 2, 3], -1) == 0


@given(st.lists(gaussians, min_size=1, max_size=5))
def test_newton_identity(xs):
    # k e_k = sum_{m=1}^{k} (-1)^{m-1} e_{k-m} p_m
    es = esym_all(xs)
    for k in range(1, len(xs) + 1):
        rhs = sum(((-1) ** (m - 1) * es[k - m] * power_sum(xs, m) for m in range(1, k + 1)), 0)
        assert k * es[k] == rhs


def test_power_sum_zero():
    assert power_sum([3, 4, 5], 0) == 3


def test_enumeration_size():
    for n in range(1, 7):
        assert len(enumerate_permutations(n)) == factorial(n)
