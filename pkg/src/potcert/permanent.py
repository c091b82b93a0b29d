"""Permanents by direct expansion and by Ryser's formula, plus related helpers."""

from __future__ import annotations

from fractions import Fraction

from .arith import ONE, ZERO, GaussianRational, as_gaussian
from .combinatorics import ResourceLimitError, enumerate_permutations, sign
from .matrices import hadamard, is_square, submatrix, to_gaussian_integers

__all__ = [
    "NAIVE_CAP",
    "RYSER_CAP",
    "diag_product",
    "permanent",
    "permanent_naive",
    "permanent_ryser",
    "permanent_block",
    "det_leibniz",
    "bapat_sunder_gap",
]

NAIVE_CAP = 8
RYSER_CAP = 20


def _check_square(A):
    if not is_square(A):
        raise ValueError("matrix must be square")


def diag_product(A, sigma):
    """``prod_i A[sigma(i)][i]``."""
    if len(sigma) != len(A):
        raise ValueError("permutation size does not match matrix")
    out = ONE
    for i, s in enumerate(sigma):
        out = out * A[s][i]
    return out


def permanent_naive(A):
    """Sum of diagonal products over all of S_n. Generic over the scalar type."""
    _check_square(A)
    n = len(A)
    if n > NAIVE_CAP:
        raise ResourceLimitError(f"naive permanent capped at n <= {NAIVE_CAP}")
    if n == 0:
        return ONE
    total = ZERO
    for sigma in enumerate_permutations(n, cap=NAIVE_CAP):
        total = total + diag_product(A, sigma)
    return total


def permanent_ryser(A) -> GaussianRational:
    """Ryser's inclusion-exclusion formula with Gray-code column updates.

    Runs on Gaussian integers after clearing denominators. Entries must reduce
    to Q(i).
    """
    _check_square(A)
    n = len(A)
    if n > RYSER_CAP:
        raise ResourceLimitError(f"Ryser permanent capped at n <= {RYSER_CAP}")
    if n == 0:
        return ONE
    D, re, im = to_gaussian_integers(A)
    sum_re = [0] * n
    sum_im = [0] * n
    total_re = total_im = 0
    gray = 0
    odd = False  # parity of the current column subset
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        gray ^= 1 << j
        if gray >> j & 1:
            for r in range(n):
                sum_re[r] += re[r][j]
                sum_im[r] += im[r][j]
        else:
            for r in range(n):
                sum_re[r] -= re[r][j]
                sum_im[r] -= im[r][j]
        odd = not odd
        pr, pi = sum_re[0], sum_im[0]
        for r in range(1, n):
            a, b = sum_re[r], sum_im[r]
            pr, pi = pr * a - pi * b, pr * b + pi * a
            if not pr and not pi:
                break
        if odd:
            total_re -= pr
            total_im -= pi
        else:
            total_re += pr
            total_im += pi
    if n % 2:
        total_re, total_im = -total_re, -total_im
    scale = D ** n
    return GaussianRational(Fraction(total_re, scale), Fraction(total_im, scale))


def permanent(A, method: str = "ryser"):
    if method == "naive":
        return permanent_naive(A)
    if method == "ryser":
        return permanent_ryser([[as_gaussian(x) for x in row] for row in A])
    raise ValueError(f"unknown permanent method {method!r}")


def permanent_block(A, rows, cols, method: str = "ryser"):
    """``per(A[rows, cols])``; the empty block has permanent 1."""
    if len(rows) != len(cols):
        raise ValueError(f"block is {len(rows)}x{len(cols)}, not square")
    if not rows:
        return ONE
    return permanent(submatrix(A, rows, cols), method=method)


def det_leibniz(A):
    """Signed sum of diagonal products. Only for small n; used as an oracle."""
    _check_square(A)
    n = len(A)
    total = ZERO
    for sigma in enumerate_permutations(n, cap=NAIVE_CAP):
        term = diag_product(A, sigma)
        total = total + term if sign(sigma) > 0 else total - term
    return total


def bapat_sunder_gap(A, B) -> GaussianRational:
    """``per(A) * prod_i B[i][i] - per(A o B)``; nonnegative iff the inequality holds."""
    if len(A) != len(B) or not (is_square(A) and is_square(B)):
        raise ValueError("A and B must be square of the same size")
    diag = ONE
    for i in range(len(B)):
        diag = diag * B[i][i]
    return permanent(A) * diag - permanent(hadamard(A, B))
