"""Exact linear algebra over Q(i).

Rank and determinant use Bareiss fraction-free elimination on Gaussian
integers (denominators cleared first), with a deterministic pivot rule:
first nonzero entry of the leading column, scanning columns left to right.
Every intermediate value is the determinant of a minor of the input, so the
exact divisions at each step never leave Z[i].
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .arith import ONE, ZERO, GaussianRational, as_gaussian, conj
from .matrices import (
    inner,
    is_hermitian,
    is_square,
    matvec,
    shift,
    submatrix,
    to_gaussian_integers,
)

__all__ = [
    "PSD_CAP",
    "rank_exact",
    "det_exact",
    "kernel_dim",
    "nullspace",
    "is_psd",
    "principal_minors",
    "rayleigh",
    "gram",
    "psd_shift_certificate",
]

PSD_CAP = 12


def _gauss_div(ar: int, ai: int, br: int, bi: int) -> tuple[int, int]:
    """Exact quotient ``(ar + ai i) / (br + bi i)`` in Z[i]."""
    if bi == 0:
        qr, rr = divmod(ar, br)
        qi, ri = divmod(ai, br)
        if rr or ri:
            raise ArithmeticError("inexact Gaussian division")
        return qr, qi
    n = br * br + bi * bi
    nr = ar * br + ai * bi
    ni = ai * br - ar * bi
    qr, rr = divmod(nr, n)
    qi, ri = divmod(ni, n)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian division")
    return qr, qi


def _bareiss(re: list[list[int]], im: list[list[int]], want_det: bool = False):
    """Fraction-free row reduction in place. Returns ``(rank, det_re, det_im)``.

    The determinant is only meaningful for square input with ``want_det``.
    """
    rows = len(re)
    cols = len(re[0]) if rows else 0
    prev_r, prev_i = 1, 0
    sgn = 1
    rank = 0
    col = 0
    while rank < rows and col < cols:
        piv = None
        for r in range(rank, rows):
            if re[r][col] or im[r][col]:
                piv = r
                break
        if piv is None:
            col += 1
            if want_det:
                return rank, 0, 0
            continue
        if piv != rank:
            re[piv], re[rank] = re[rank], re[piv]
            im[piv], im[rank] = im[rank], im[piv]
            sgn = -sgn
        pr, pi = re[rank][col], im[rank][col]
        top_re, top_im = re[rank], im[rank]
        trivial_prev = prev_r == 1 and prev_i == 0
        for r in range(rank + 1, rows):
            row_re, row_im = re[r], im[r]
            fr, fi = row_re[col], row_im[col]
            for j in range(col + 1, cols):
                a, b = row_re[j], row_im[j]
                c, d = top_re[j], top_im[j]
                # pivot * row[j] - factor * top[j]
                xr = pr * a - pi * b - (fr * c - fi * d)
                xi = pr * b + pi * a - (fr * d + fi * c)
                if trivial_prev:
                    row_re[j], row_im[j] = xr, xi
                elif xr or xi:
                    row_re[j], row_im[j] = _gauss_div(xr, xi, prev_r, prev_i)
                else:
                    row_re[j] = row_im[j] = 0
            row_re[col] = row_im[col] = 0
        prev_r, prev_i = pr, pi
        rank += 1
        col += 1
    if want_det:
        if rank < rows:
            return rank, 0, 0
        return rank, sgn * prev_r, sgn * prev_i
    return rank, 0, 0


def rank_exact(M) -> int:
    """Rank over Q(i)."""
    if not M:
        return 0
    _, re, im = to_gaussian_integers(M)
    rank, _, _ = _bareiss(re, im)
    return rank


def det_exact(M) -> GaussianRational:
    if not is_square(M):
        raise ValueError("determinant needs a square matrix")
    n = len(M)
    if n == 0:
        return ONE
    D, re, im = to_gaussian_integers(M)
    _, dr, di = _bareiss(re, im, want_det=True)
    scale = D ** n
    return GaussianRational(Fraction(dr, scale), Fraction(di, scale))


def kernel_dim(M, lam=0) -> int:
    """``dim ker(M - lam I)``."""
    return len(M) - rank_exact(shift(M, lam))


def nullspace(M) -> list[list[GaussianRational]]:
    """Basis of ``{w : M w = 0}`` by Gauss-Jordan over Q(i). For small matrices."""
    A = [[as_gaussian(x) for x in row] for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    pivots = []
    r = 0
    for col in range(cols):
        piv = next((k for k in range(r, rows) if A[k][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = A[r][col].inverse()
        A[r] = [x * inv for x in A[r]]
        for k in range(rows):
            if k != r and A[k][col]:
                f = A[k][col]
                A[k] = [x - f * y for x, y in zip(A[k], A[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fcol in free:
        w = [ZERO] * cols
        w[fcol] = ONE
        for row, pcol in enumerate(pivots):
            w[pcol] = -A[row][fcol]
        basis.append(w)
    return basis


def principal_minors(M):
    """Yield ``(index_subset, det)`` for every nonempty principal submatrix."""
    n = len(M)
    for k in range(1, n + 1):
        for idx in combinations(range(n), k):
            yield idx, det_exact(submatrix(M, idx, idx))


def is_psd(M) -> bool:
    """Exact PSD test: Hermitian with every principal minor nonnegative."""
    n = len(M)
    if n > PSD_CAP:
        raise ValueError(f"principal-minor PSD test capped at n <= {PSD_CAP}")
    if not is_hermitian(M):
        raise ValueError("is_psd needs a Hermitian matrix")
    for _, d in principal_minors(M):
        if d.im != 0:
            raise ArithmeticError("Hermitian principal minor with imaginary part")
        if d.re < 0:
            return False
    return True


def rayleigh(M, w) -> Fraction:
    """``w* M w / w* w``, exact; real for Hermitian ``M``."""
    den = inner(w, w)
    if not den:
        raise ValueError("Rayleigh quotient of the zero vector")
    num = inner(matvec(M, w), w)
    q = num / den
    if q.im != 0:
        raise ArithmeticError("Rayleigh quotient is not real; is M Hermitian?")
    return q.re


def gram(vectors, inner_product=None):
    """``G[i][j] = <vectors[i], vectors[j]>``.

    Elements either supply ``.inner(other)`` or are plain coordinate
    sequences, in which case the standard inner product is used.
    """
    vectors = list(vectors)
    if not vectors:
        return []
    kind = type(vectors[0])
    if any(type(v) is not kind for v in vectors):
        raise ValueError("gram() needs elements of a single inner-product space")
    if inner_product is None:
        if hasattr(vectors[0], "inner"):
            inner_product = lambda a, b: a.inner(b)  # noqa: E731
        else:
            if len({len(v) for v in vectors}) != 1:
                raise ValueError("coordinate vectors of different lengths")
            inner_product = inner
    n = len(vectors)
    G = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g = inner_product(vectors[i], vectors[j])
            G[i][j] = g
            G[j][i] = g if i == j else conj(g)
    return G


def psd_shift_certificate(M, lam) -> bool:
    """True iff ``lam I - M`` is PSD, i.e. every eigenvalue of ``M`` is ``<= lam``."""
    n = len(M)
    lam = as_gaussian(lam)
    shifted = [[(lam if i == j else ZERO) - M[i][j] for j in range(n)] for i in range(n)]
    return is_psd(shifted)

