"""Schur power matrix, the subset matrices C_k, and associated matrices.

``associated_matrix`` never calls the direct constructors: it sums scaled
0/1 action matrices over the whole symmetric group, so it can serve as an
oracle for ``schur_power`` and ``ck_matrix``.
"""

from __future__ import annotations

from .arith import ONE, ZERO
from .combinatorics import (
    ResourceLimitError,
    complement,
    compose,
    enumerate_k_subsets,
    enumerate_permutations,
    inverse,
    permutation_index,
    subset_index,
)
from .matrices import IndexedMatrix, is_square
from .permanent import diag_product, permanent_block

__all__ = [
    "SCHUR_CAP",
    "schur_power",
    "ck_matrix",
    "associated_matrix",
    "lift_subset_vector",
    "left_regular_entry",
]

SCHUR_CAP = 6


def schur_power(A, max_n: int = SCHUR_CAP) -> IndexedMatrix:
    """``pi(A)[sigma][tau] = prod_i A[sigma(i)][tau(i)]``, rows in lexicographic order."""
    if not is_square(A):
        raise ValueError("schur_power needs a square matrix")
    n = len(A)
    if n > max_n:
        raise ResourceLimitError(f"schur_power capped at n <= {max_n}; got n={n}")
    perms = enumerate_permutations(n)
    entries = []
    for sigma in perms:
        rows = [A[s] for s in sigma]
        out = []
        for tau in perms:
            prod = ONE
            for row, t in zip(rows, tau):
                prod = prod * row[t]
            out.append(prod)
        entries.append(tuple(out))
    return IndexedMatrix(tuple(entries), perms, "permutation")


def ck_matrix(A, k: int) -> IndexedMatrix:
    """``C_k(A)[I][J] = per(A[I, J]) * per(A[I^c, J^c])`` over k-subsets."""
    if not is_square(A):
        raise ValueError("ck_matrix needs a square matrix")
    n = len(A)
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= n, got k={k}, n={n}")
    subsets = enumerate_k_subsets(n, k)
    comps = [complement(s, n) for s in subsets]
    entries = []
    for I, Ic in zip(subsets, comps):
        entries.append(
            tuple(
                permanent_block(A, I, J) * permanent_block(A, Ic, Jc)
                for J, Jc in zip(subsets, comps)
            )
        )
    return IndexedMatrix(tuple(entries), subsets, "subset")


def associated_matrix(rep: str, A, k: int | None = None, max_n: int = SCHUR_CAP) -> IndexedMatrix:
    """``sum over eta in S_n of d_A(eta) * W(eta)``.

    ``rep="left_regular"``: ``W(eta)`` sends basis vector ``tau`` to
    ``eta o tau``. ``rep="subset_action"``: ``W(eta)`` sends subset ``J`` to
    ``eta(J)`` (needs ``k``).
    """
    n = len(A)
    if n > max_n:
        raise ResourceLimitError(f"associated_matrix capped at n <= {max_n}; got n={n}")
    perms = enumerate_permutations(n)
    if rep == "left_regular":
        index = permutation_index(n)
        labels = perms
        N = len(perms)
        act = lambda eta, tau: index[compose(eta, tau)]  # noqa: E731
        kind = "permutation"
    elif rep == "subset_action":
        if k is None or not 0 <= k <= n:
            raise ValueError("subset_action needs 0 <= k <= n")
        index = subset_index(n, k)
        labels = enumerate_k_subsets(n, k)
        N = len(labels)
        act = lambda eta, J: index[tuple(sorted(eta[j] for j in J))]  # noqa: E731
        kind = "subset"
    else:
        raise ValueError(f"unknown representation {rep!r}")
    M = [[ZERO] * N for _ in range(N)]
    for eta in perms:
        weight = diag_product(A, eta)
        if not weight:
            continue
        for col, label in enumerate(labels):
            row = act(eta, label)
            M[row][col] = M[row][col] + weight
    return IndexedMatrix(tuple(tuple(r) for r in M), labels, kind)


def lift_subset_vector(w, n: int, k: int) -> list:
    """Intertwiner from the k-subset module into the regular module.

    ``(T w)[tau] = w[tau({0..k-1})]``. It satisfies ``pi(A) T = T C_k(A)``, so an
    eigenvector of ``C_k(A)`` lifts to an eigenvector of ``pi(A)`` with the
    same eigenvalue and the same Rayleigh quotient.
    """
    index = subset_index(n, k)
    base = tuple(range(k))
    return [w[index[tuple(sorted(tau[j] for j in base))]] for tau in enumerate_permutations(n)]


def left_regular_entry(A, sigma, tau):
    """``d_A(sigma o tau^-1)``; equals ``pi(A)[sigma][tau]``."""
    return diag_product(A, compose(sigma, inverse(tau)))
