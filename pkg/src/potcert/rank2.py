"""Rank-2 PSD matrices ``A = v v* + u u*`` and their formalized form.

After a unitary mixing makes every ``v[i]`` nonzero, dividing row ``i`` by
``v[i]`` gives ``H = 1 1* + x x*`` with ``x[i] = u[i] / v[i]``. Everything
about ``per(H)``, ``per(H(i|j))`` and ``C_1(H)`` then reduces to elementary
symmetric polynomials of ``x``.

Vectors may hold :class:`GaussianRational` or :class:`QuadExtScalar`
entries; matrix entries must reduce to Q(i).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from math import factorial, gcd

from .arith import ONE, ZERO, GaussianRational, as_gaussian, conj, quad_reduce
from .combinatorics import esym_all, esym_omit
from .errors import NotFormalizableError, VerificationError
from .linalg import det_exact, rank_exact
from .permanent import permanent
from .schur import SCHUR_CAP, ck_matrix, schur_power

__all__ = [
    "Rank2Decomposition",
    "FormalizedVector",
    "C1Eigenstructure",
    "is_formalizable",
    "unitary_mixings",
    "formalize",
    "formalized_of",
    "scaling_factor",
    "per_formalized",
    "per_principal_formalized",
    "minor_per_formalized",
    "c1_eigenstructure",
    "c1_rank",
    "c1_det",
    "c1_det_formula",
    "schur_rank_bound_check",
]


def _abs2(z) -> Fraction:
    return as_gaussian(quad_reduce(z * conj(z))).re


def _rank2_matrix(v, u) -> list[list[GaussianRational]]:
    n = len(v)
    return [
        [as_gaussian(quad_reduce(v[i] * conj(v[j]) + u[i] * conj(u[j]))) for j in range(n)]
        for i in range(n)
    ]


@dataclass(frozen=True)
class Rank2Decomposition:
    v: tuple
    u: tuple

    def __post_init__(self):
        if len(self.v) != len(self.u):
            raise ValueError("v and u must have the same length")
        object.__setattr__(self, "v", tuple(self.v))
        object.__setattr__(self, "u", tuple(self.u))

    @property
    def n(self) -> int:
        return len(self.v)

    def matrix(self):
        """``v v* + u u*``."""
        return _rank2_matrix(self.v, self.u)


@dataclass(frozen=True)
class FormalizedVector:
    """The ratios ``x[i] = u[i] / v[i]``; represents ``H[i][j] = 1 + x[i] conj(x[j])``."""

    x: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))

    @property
    def n(self) -> int:
        return len(self.x)

    def matrix(self):
        return _rank2_matrix((ONE,) * self.n, self.x)

    def decomposition(self) -> Rank2Decomposition:
        return Rank2Decomposition((ONE,) * self.n, self.x)


def is_formalizable(d: Rank2Decomposition) -> bool:
    """True iff no index has ``v[i] == u[i] == 0`` (no zero row)."""
    return all(a or b for a, b in zip(d.v, d.u))


def unitary_mixings():
    """Rational unitary mixings ``(p, q, r)`` with ``p**2 + q**2 == r**2``.

    Primitive Pythagorean triples in order of ``m`` then ``k``, each yielded
    as ``(m^2-k^2, 2mk)`` and then swapped: (3,4,5), (4,3,5), (5,12,13), ...
    All ratios ``p/q`` are distinct.
    """
    for m in count(2):
        for k in range(1, m):
            if (m - k) % 2 == 1 and gcd(m, k) == 1:
                a, b, r = m * m - k * k, 2 * m * k, m * m + k * k
                yield a, b, r
                yield b, a, r


def _mix(d: Rank2Decomposition, p, q, r) -> Rank2Decomposition:
    p, q = GaussianRational(p), GaussianRational(q)
    pc, qc = p.conjugate(), q.conjugate()
    v = tuple((a * p + b * q) / r for a, b in zip(d.v, d.u))
    u = tuple((-a * qc + b * pc) / r for a, b in zip(d.v, d.u))
    return Rank2Decomposition(v, u)


def formalize(d: Rank2Decomposition) -> Rank2Decomposition:
    """Return an equivalent decomposition whose first vector has no zero entry.

    Unchanged if ``v`` already has none; otherwise the first mixing from
    :func:`unitary_mixings` that clears every zero. Each coordinate rules out
    at most one ratio ``p/q``, so at most ``n + 1`` mixings are tried.
    """
    if not is_formalizable(d):
        raise NotFormalizableError("decomposition has a zero row")
    if all(d.v):
        return d
    for p, q, r in unitary_mixings():
        mixed = _mix(d, p, q, r)
        if all(mixed.v):
            return mixed
    raise AssertionError("unreachable")


def formalized_of(d: Rank2Decomposition) -> FormalizedVector:
    if not all(d.v):
        raise ValueError("formalized_of needs every v[i] nonzero; call formalize() first")
    return FormalizedVector(tuple(b / a for a, b in zip(d.v, d.u)))


def scaling_factor(d: Rank2Decomposition) -> Fraction:
    """``prod |v[i]|^2``: ``pi(A) = scaling_factor * pi(A')`` entrywise."""
    out = Fraction(1)
    for a in d.v:
        out *= _abs2(a)
    return out


def _as_x(x):
    return x.x if isinstance(x, FormalizedVector) else tuple(x)


def per_formalized(x) -> GaussianRational:
    """``per(H) = sum_k k! (n-k)! |e_k|^2``."""
    xs = _as_x(x)
    n = len(xs)
    e = esym_all(xs)
    return GaussianRational(sum(factorial(k) * factorial(n - k) * _abs2(e[k]) for k in range(n + 1)))


def per_principal_formalized(x, subset) -> GaussianRational:
    """``per(H[S, S])`` by the same closed form restricted to the variables in ``S``."""
    xs = _as_x(x)
    return per_formalized([xs[i] for i in subset])


def minor_per_formalized(x, i: int, j: int) -> GaussianRational:
    """``per(H(i|j)) = sum_k k! (n-1-k)! e_k(x_i) conj(e_k(x_j))`` (0-based ``i, j``)."""
    xs = _as_x(x)
    n = len(xs)
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("minor index out of range")
    total = ZERO
    for k in range(n):
        w = factorial(k) * factorial(n - 1 - k)
        total = total + as_gaussian(quad_reduce(esym_omit(xs, k, i) * conj(esym_omit(xs, k, j)) * w))
    return total


@dataclass(frozen=True)
class C1Eigenstructure:
    """``C_1(H) = base_weight * 1 1* + sum_k weights[k-1] * v_k v_k*``."""

    per: GaussianRational
    base_weight: Fraction
    base_vector: tuple
    weights: tuple  # weights[k-1] = (k-1)!(n-1-k)!/n
    vectors: tuple  # vectors[k-1] = v_k, entries n e_k(x_i) - (n-k) e_k

    def matrix(self):
        n = len(self.base_vector)
        out = [[self.per / n for _ in range(n)] for _ in range(n)]
        for w, vec in zip(self.weights, self.vectors):
            for i in range(n):
                for j in range(n):
                    out[i][j] = out[i][j] + as_gaussian(quad_reduce(vec[i] * conj(vec[j]))) * w
        return out

    def orthogonality(self) -> list:
        """``<1, v_k>`` for each k; all zero."""
        return [as_gaussian(quad_reduce(sum(vec, ZERO))) for vec in self.vectors]

    def gram(self) -> list[list[GaussianRational]]:
        """Pairwise inner products of ``(1, v_1, ..., v_{n-1})``."""
        vecs = [self.base_vector, *self.vectors]
        return [
            [as_gaussian(quad_reduce(sum((a * conj(b) for a, b in zip(p, q)), ZERO))) for q in vecs]
            for p in vecs
        ]

    def eigenvalues(self) -> list[GaussianRational]:
        """``per`` and ``weights[k-1] * |v_k|^2``: the spectrum when the vectors are orthogonal."""
        out = [self.per]
        for w, vec in zip(self.weights, self.vectors):
            out.append(GaussianRational(w * sum((_abs2(a) for a in vec), Fraction(0))))
        return out


def c1_eigenstructure(x) -> C1Eigenstructure:
    xs = _as_x(x)
    n = len(xs)
    e = esym_all(xs)
    per = per_formalized(xs)
    weights = tuple(
        Fraction(factorial(k - 1) * factorial(n - 1 - k), n) for k in range(1, n)
    )
    vectors = tuple(
        tuple(_reduce_soft(n * esym_omit(xs, k, i) - (n - k) * e[k]) for i in range(n))
        for k in range(1, n)
    )
    return C1Eigenstructure(per, Fraction(per.re, n), (ONE,) * n, weights, vectors)


def _reduce_soft(z):
    z = quad_reduce(z)
    return as_gaussian(z) if isinstance(z, (int, Fraction)) else z


def c1_rank(x) -> int:
    """Number of distinct ``x[i]``; checked against the exact rank of ``C_1(H)``."""
    fv = x if isinstance(x, FormalizedVector) else FormalizedVector(x)
    distinct = len(set(fv.x))
    actual = rank_exact(ck_matrix(fv.matrix(), 1))
    if actual != distinct:
        raise VerificationError(f"rank C_1(H) = {actual} but {distinct} distinct x_i")
    return distinct


def c1_det_formula(d: Rank2Decomposition) -> GaussianRational:
    """``per(A)/n * prod_k n (k-1)! (n-1-k)! * prod_{i<j} |v_i u_j - v_j u_i|^2``."""
    n = d.n
    A = d.matrix()
    out = Fraction(permanent(A).re, n)
    for k in range(1, n):
        out *= n * factorial(k - 1) * factorial(n - 1 - k)
    for i in range(n):
        for j in range(i + 1, n):
            out *= _abs2(d.v[i] * d.u[j] - d.v[j] * d.u[i])
    return GaussianRational(out)


def c1_det(d: Rank2Decomposition, check: bool = True) -> GaussianRational:
    """Closed-form ``det C_1(A)``; with ``check`` it must equal the eliminated determinant."""
    value = c1_det_formula(d)
    if check:
        direct = det_exact(ck_matrix(d.matrix(), 1))
        if direct != value:
            raise VerificationError(f"det C_1 closed form {value} != elimination {direct}")
    return value


def schur_rank_bound_check(d: Rank2Decomposition, max_n: int = SCHUR_CAP) -> tuple[int, int]:
    """``(2**n - n, rank pi(A))``; raises if the rank exceeds the bound."""
    bound = 2 ** d.n - d.n
    actual = rank_exact(schur_power(d.matrix(), max_n=max_n))
    if actual > bound:
        raise VerificationError(f"rank pi(A) = {actual} exceeds 2^n - n = {bound}")
    return bound, actual

