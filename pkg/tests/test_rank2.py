from fractions import Fraction
from itertools import islice
from math import factorial

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from potcert.arith import GaussianRational
from potcert.certifier import build_H, family_vector
from potcert.errors import NotFormalizableError
from potcert.linalg import det_exact, is_psd, rank_exact
from potcert.matrices import add, is_hermitian, outer, submatrix
from potcert.permanent import permanent
from potcert.rank2 import (
    FormalizedVector,
    Rank2Decomposition,
    c1_det,
    c1_eigenstructure,
    c1_rank,
    formalize,
    formalized_of,
    is_formalizable,
    minor_per_formalized,
    per_formalized,
    per_principal_formalized,
    scaling_factor,
    schur_rank_bound_check,
    unitary_mixings,
)
from potcert.schur import ck_matrix, schur_power
from conftest import gaussians, nonzero_gaussians, vectors

G = GaussianRational


@st.composite
def decompositions(draw, min_n=2, max_n=4, nonzero_v=False):
    n = draw(st.integers(min_n, max_n))
    v = draw(vectors(n, nonzero_gaussians if nonzero_v else gaussians))
    u = draw(vectors(n))
    return Rank2Decomposition(v, u)


def _outer_sum(d):
    return add(outer(d.v, d.v), outer(d.u, d.u))


# formalization ------------------------------------------------------------------


def test_is_formalizable_examples():
    assert is_formalizable(Rank2Decomposition((1, 1), (0, 1)))
    assert not is_formalizable(Rank2Decomposition((1, 0), (0, 0)))
    assert is_formalizable(Rank2Decomposition((0, 1), (1, 0)))


def test_formalize_examples():
    d = Rank2Decomposition((1, 1), (0, 1))
    assert formalize(d) == d
    swapped = Rank2Decomposition((0, 1), (1, 0))
    out = formalize(swapped)
    assert out.v == (Fraction(4, 5), Fraction(3, 5))
    # the mixing formula fixes u' up to the sign convention; the outer sum is what matters
    assert out.u == (Fraction(3, 5), Fraction(-4, 5))
    assert _outer_sum(out) == _outer_sum(swapped)


def test_formalize_rejects_zero_row():
    with pytest.raises(NotFormalizableError):
        formalize(Rank2Decomposition((1, 0), (0, 0)))


def test_mixings_are_unitary_and_distinct():
    seen = set()
    for p, q, r in islice(unitary_mixings(), 40):
        assert p * p + q * q == r * r
        seen.add(Fraction(p, q))
    assert len(seen) == 40


@given(decompositions(max_n=5))
def test_formalize_preserves_matrix(d):
    assume(is_formalizable(d))
    out = formalize(d)
    assert all(out.v)
    assert _outer_sum(out) == _outer_sum(d)
    assert out.matrix() == d.matrix()


def test_formalized_of():
    assert formalized_of(Rank2Decomposition((1, 1, 1), (2, 3, 4))).x == (2, 3, 4)
    x = formalized_of(Rank2Decomposition((2, 2), (G(0, 2), -2))).x
    assert x == (G(0, 1), -1)
    with pytest.raises(ValueError):
        formalized_of(Rank2Decomposition((0, 1), (1, 1)))


@settings(max_examples=25)
@given(decompositions(min_n=2, max_n=3, nonzero_v=True))
def test_scaling_law(d):
    A = d.matrix()
    Ap = formalized_of(d).matrix()
    t = scaling_factor(d)
    assert [[t * x for x in row] for row in schur_power(Ap).entries] == [list(r) for r in schur_power(A).entries]
    for k in range(1, d.n + 1):
        assert [[t * x for x in row] for row in ck_matrix(Ap, k).entries] == [list(r) for r in ck_matrix(A, k).entries]


@given(st.integers(1, 5).flatmap(lambda n: vectors(n)))
def test_reconstruction_is_psd_rank2(x):
    H = FormalizedVector(x).matrix()
    assert is_hermitian(H) and is_psd(H) and rank_exact(H) <= 2


# closed-form permanents ---------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 3, 5])
def test_per_formalized_zero_vector(n):
    assert per_formalized([0] * n) == factorial(n)


def test_per_formalized_family():
    assert per_formalized(family_vector(2)) == 504


@given(st.integers(1, 4).flatmap(lambda n: vectors(n)))
def test_per_formalized_matches_naive(x):
    assert per_formalized(x) == permanent(FormalizedVector(x).matrix(), "naive")


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(vectors(n), st.integers(0, n - 1), st.integers(0, n - 1))))
def test_minor_per_formalized(data):
    x, i, j = data
    n = len(x)
    H = FormalizedVector(x).matrix()
    rows = [k for k in range(n) if k != i]
    cols = [k for k in range(n) if k != j]
    assert minor_per_formalized(x, i, j) == permanent(submatrix(H, rows, cols), "naive")
    if i == j:
        assert minor_per_formalized(x, i, i).im == 0


def test_minor_per_zero_vector():
    assert minor_per_formalized([0] * 4, 1, 2) == factorial(3)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(vectors(n), st.sets(st.integers(0, n - 1)))))
def test_per_principal(data):
    x, subset = data
    subset = sorted(subset)
    H = FormalizedVector(x).matrix()
    assert per_principal_formalized(x, subset) == permanent(submatrix(H, subset, subset))


# C_1 structure -------------------------------------------------------------------------


def test_c1_family_vectors():
    eig = c1_eigenstructure(family_vector(2))
    i = G(0, 1)
    directions = [
        (-i, 1, i, -1, 0),
        (-1, 1, -1, 1, 0),
        (i, 1, -i, -1, 0),
        (1, 1, 1, 1, -4),
    ]
    for vec, direction in zip(eig.vectors, directions):
        # proportional up to a power of sqrt(c)
        for a in range(5):
            for b in range(5):
                assert vec[a] * direction[b] == vec[b] * direction[a]
    assert eig.eigenvalues() == [504, 240, 160, 320, 384]


@pytest.mark.parametrize("c", [1, 2, 3])
def test_c1_family_reconstruction(c):
    x = family_vector(c)
    eig = c1_eigenstructure(x)
    assert eig.matrix() == [list(r) for r in ck_matrix(build_H(c), 1).entries]
    assert all(z == 0 for z in eig.orthogonality())


@settings(max_examples=25)
@given(st.integers(2, 5).flatmap(lambda n: vectors(n)))
def test_c1_reconstruction_random(x):
    eig = c1_eigenstructure(x)
    assert eig.matrix() == [list(r) for r in ck_matrix(FormalizedVector(x).matrix(), 1).entries]
    assert all(z == 0 for z in eig.orthogonality())


def test_c1_rank_examples():
    assert c1_rank([G(2)] * 4) == 1
    assert c1_rank([1, 1, 2]) == 2
    assert c1_rank(family_vector(2)) == 5


@settings(max_examples=25)
@given(st.integers(1, 4).flatmap(lambda n: st.lists(st.sampled_from([G(0), G(1), G(0, 1), G(2, -1)]), min_size=n, max_size=n)))
def test_c1_rank_counts_distinct(x):
    assert c1_rank(x) == len(set(x))


def test_c1_det_family():
    d = FormalizedVector(family_vector(2)).decomposition()
    assert c1_det(d) == 2378170368000 == 504 * 240 * 160 * 320 * 384


def test_c1_det_duplicate_rows():
    d = Rank2Decomposition((1, 2, 1), (3, G(0, 1), 3))
    assert c1_det(d) == 0 == det_exact(ck_matrix(d.matrix(), 1))


@settings(max_examples=25)
@given(decompositions(min_n=2, max_n=4))
def test_c1_det_random(d):
    assert c1_det(d) == det_exact(ck_matrix(d.matrix(), 1))


def test_rank_bound_examples():
    bound, actual = schur_rank_bound_check(Rank2Decomposition((1, 2), (G(0, 1), 1)))
    assert bound == 2 and actual <= 2


@settings(max_examples=15)
@given(decompositions(min_n=3, max_n=3))
def test_rank_bound_random(d):
    bound, actual = schur_rank_bound_check(d)
    assert bound == 5 and actual <= 5
