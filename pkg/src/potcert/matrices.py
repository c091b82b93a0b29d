"""Dense exact matrices as lists of rows of :class:`GaussianRational`."""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .arith import ZERO, ONE, GaussianRational, as_gaussian, conj

__all__ = [
    "Matrix",
    "IndexedMatrix",
    "to_matrix",
    "identity_matrix",
    "ones_matrix",
    "is_square",
    "is_hermitian",
    "conj_transpose",
    "matmul",
    "matvec",
    "hadamard",
    "shift",
    "trace",
    "submatrix",
    "outer",
    "add",
    "scale",
    "inner",
    "to_gaussian_integers",
]

Matrix = list  # list[list[GaussianRational]]


@dataclass(frozen=True)
class IndexedMatrix:
    """A square matrix whose rows and columns carry combinatorial labels.

    ``index[r]`` is the permutation or subset labelling row/column ``r``.
    Behaves like the underlying list of rows for the linear-algebra helpers.
    """

    entries: tuple
    index: tuple
    kind: str  # "permutation" or "subset"

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, r):
        return self.entries[r]

    def __iter__(self):
        return iter(self.entries)

    def rows(self) -> Matrix:
        return [list(row) for row in self.entries]


def to_matrix(rows) -> Matrix:
    return [[as_gaussian(x) for x in row] for row in rows]


def identity_matrix(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def ones_matrix(n: int) -> Matrix:
    return [[ONE] * n for _ in range(n)]


def is_square(M) -> bool:
    n = len(M)
    return all(len(row) == n for row in M)


def is_hermitian(M) -> bool:
    n = len(M)
    if not is_square(M):
        return False
    return all(M[j][i] == conj(M[i][j]) for i in range(n) for j in range(i, n))


def conj_transpose(M) -> Matrix:
    return [[conj(M[i][j]) for i in range(len(M))] for j in range(len(M[0]))]


def matmul(A, B) -> Matrix:
    cols = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), ZERO) for col in cols] for row in A]


def matvec(A, w) -> list:
    return [sum((a * b for a, b in zip(row, w)), ZERO) for row in A]


def inner(a, b):
    """``<a, b> = sum a_i conj(b_i)``: linear in the first slot."""
    return sum((x * conj(y) for x, y in zip(a, b)), ZERO)


def hadamard(A, B) -> Matrix:
    return [[a * b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def add(A, B) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(t, A) -> Matrix:
    return [[t * a for a in row] for row in A]


def shift(M, lam) -> Matrix:
    """``M - lam * Identity``."""
    lam = as_gaussian(lam)
    return [[x - lam if i == j else x for j, x in enumerate(row)] for i, row in enumerate(M)]


def trace(M):
    return sum((M[i][i] for i in range(len(M))), ZERO)


def submatrix(M, rows, cols) -> Matrix:
    return [[M[i][j] for j in cols] for i in rows]


def outer(a, b) -> Matrix:
    """``a b*``."""
    return [[x * conj(y) for y in b] for x in a]


def to_gaussian_integers(M) -> tuple[int, list[list[int]], list[list[int]]]:
    """Clear denominators: returns ``(D, re, im)`` with ``D*M == re + i*im`` integral."""
    D = 1
    for row in M:
        for z in row:
            z = as_gaussian(z)
            D = lcm(D, z.re.denominator, z.im.denominator)
    re_rows, im_rows = [], []
    for row in M:
        re_row, im_row = [], []
        for z in row:
            z = as_gaussian(z)
            re_row.append(z.re.numerator * (D // z.re.denominator))
            im_row.append(z.im.numerator * (D // z.im.denominator))
        re_rows.append(re_row)
        im_rows.append(im_row)
    return D, re_rows, im_rows


def gaussian(re: int, im: int) -> GaussianRational:
    return GaussianRational(re, im)
