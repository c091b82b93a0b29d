from fractions import Fraction

import pytest
from hypothesis import given, settings

from potcert.arith import GaussianRational
from potcert.certifier import build_H
from potcert.combinatorics import enumerate_k_subsets
from potcert.errors import ResourceLimitError
from potcert.linalg import det_exact
from potcert.matrices import hadamard, identity_matrix, ones_matrix, submatrix
from potcert.permanent import (
    bapat_sunder_gap,
    det_leibniz,
    diag_product,
    permanent,
    permanent_block,
    permanent_naive,
    permanent_ryser,
)
from conftest import random_matrix, square_matrices


def test_diag_product():
    assert diag_product(identity_matrix(3), (0, 1, 2)) == 1
    assert diag_product(identity_matrix(3), (1, 2, 0)) == 0
    assert diag_product(ones_matrix(3), (2, 0, 1)) == 1


def test_small_permanents():
    assert permanent(identity_matrix(4)) == 1
    assert permanent(ones_matrix(4)) == 24
    assert permanent([[GaussianRational(0, 1)]]) == GaussianRational(0, 1)
    assert permanent([[1, 2], [3, 4]], method="naive") == 10


def test_family_permanent():
    H = build_H(2)
    assert permanent(H, "naive") == permanent(H, "ryser") == 504


@settings(max_examples=40)
@given(square_matrices(1, 5))
def test_ryser_equals_naive(A):
    assert permanent_ryser(A) == permanent_naive(A)


@given(square_matrices(1, 4))
def test_permanent_invariant_under_transpose(A):
    At = [list(r) for r in zip(*A)]
    assert permanent(At) == permanent(A)


@given(square_matrices(2, 4))
def test_permanent_invariant_under_row_swap(A):
    B = [A[1], A[0], *A[2:]]
    assert permanent(B) == permanent(A)


@given(square_matrices(1, 4))
def test_exact_determinant_matches_leibniz(A):
    assert det_exact(A) == det_leibniz(A)


def test_caps():
    with pytest.raises(ResourceLimitError):
        permanent_naive(ones_matrix(9))
    with pytest.raises(ResourceLimitError):
        permanent(ones_matrix(21))
    with pytest.raises(ValueError):
        permanent([[1, 2]])
    with pytest.raises(ValueError):
        permanent([[1]], method="glynn")


def test_permanent_block(rng):
    A = random_matrix(rng, 4)
    assert permanent_block(A, (), ()) == 1
    assert permanent_block(A, range(4), range(4)) == permanent(A)
    assert permanent_block(A, (0, 2), (1, 3)) == permanent(submatrix(A, (0, 2), (1, 3)))
    with pytest.raises(ValueError):
        permanent_block(A, (0, 1), (2,))


def test_laplace_expansion_along_row(rng):
    A = random_matrix(rng, 4)
    total = 0
    for j in range(4):
        cols = [k for k in range(4) if k != j]
        total = total + A[0][j] * permanent_block(A, (1, 2, 3), cols)
    assert total == permanent(A)


def test_block_products_sum_to_per_over_subsets(rng):
    # Laplace along the first two rows: sum over column pairs J
    A = random_matrix(rng, 4)
    total = 0
    for J in enumerate_k_subsets(4, 2):
        Jc = [k for k in range(4) if k not in J]
        total = total + permanent_block(A, (0, 1), J) * permanent_block(A, (2, 3), Jc)
    assert total == permanent(A)


def test_bapat_sunder_gap():
    I3 = identity_matrix(3)
    assert bapat_sunder_gap(I3, I3) == 0
    H = build_H(2)
    assert bapat_sunder_gap(H, ones_matrix(5)) == 0
    # regression value, sign not asserted
    assert bapat_sunder_gap(H, H) == 23552
    with pytest.raises(ValueError):
        bapat_sunder_gap(I3, identity_matrix(2))


def test_hadamard_with_ones_is_identity(rng):
    A = random_matrix(rng, 3)
    assert hadamard(A, ones_matrix(3)) == [list(r) for r in A]


def test_fraction_entries():
    A = [[Fraction(1, 2), 1], [1, Fraction(1, 3)]]
    assert permanent(A) == Fraction(7, 6)
