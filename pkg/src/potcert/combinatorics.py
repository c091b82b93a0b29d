"""Permutations, k-subsets, elementary symmetric polynomials and power sums.

Permutations are tuples of 0-based images (``p[i]`` is the image of ``i``);
subsets are sorted tuples of 0-based indices. Both enumerate in lexicographic
order, which fixes the row/column order of every indexed matrix.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial

from .errors import ResourceLimitError

__all__ = [
    "ResourceLimitError",
    "PERMUTATION_CAP",
    "enumerate_permutations",
    "permutation_index",
    "enumerate_k_subsets",
    "subset_index",
    "compose",
    "inverse",
    "identity",
    "sign",
    "complement",
    "esym",
    "esym_all",
    "esym_omit",
    "power_sum",
]

PERMUTATION_CAP = 8

Permutation = tuple[int, ...]
IndexSubset = tuple[int, ...]


def identity(n: int) -> Permutation:
    return tuple(range(n))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``p o q``: apply ``q`` first."""
    return tuple(p[j] for j in q)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def sign(p: Permutation) -> int:
    """+1 for even permutations, -1 for odd."""
    seen = [False] * len(p)
    s = 1
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


@lru_cache(maxsize=None)
def _perms(n: int) -> tuple[Permutation, ...]:
    return tuple(itertools.permutations(range(n)))


def enumerate_permutations(n: int, cap: int = PERMUTATION_CAP) -> tuple[Permutation, ...]:
    """All ``n!`` permutations of ``range(n)`` in lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > cap:
        raise ResourceLimitError(f"S_{n} has {factorial(n)} elements; cap is n <= {cap}")
    return _perms(n)


@lru_cache(maxsize=None)
def permutation_index(n: int) -> dict[Permutation, int]:
    return {p: k for k, p in enumerate(_perms(n))}


@lru_cache(maxsize=None)
def enumerate_k_subsets(n: int, k: int) -> tuple[IndexSubset, ...]:
    """All ``C(n, k)`` subsets of ``range(n)`` of size ``k``, lexicographic."""
    if not 0 <= k <= n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")
    return tuple(itertools.combinations(range(n), k))


@lru_cache(maxsize=None)
def subset_index(n: int, k: int) -> dict[IndexSubset, int]:
    return {s: j for j, s in enumerate(enumerate_k_subsets(n, k))}


def complement(subset, n: int) -> IndexSubset:
    members = set(subset)
    return tuple(i for i in range(n) if i not in members)


def esym_all(xs) -> list:
    """``[e_0, ..., e_m]`` of the sequence ``xs`` via the product recurrence."""
    e = [1] + [0] * len(xs)
    for count, x in enumerate(xs, start=1):
        for k in range(count, 0, -1):
            e[k] = e[k] + x * e[k - 1]
    return e


def esym(xs, k: int, subset=None):
    """Elementary symmetric polynomial ``e_k`` over ``xs[i]`` for ``i`` in ``subset``.

    ``subset=None`` means all of ``xs``. ``e_0 = 1`` and ``e_k = 0`` for
    ``k < 0`` or ``k > len(subset)``. The scalar type is whatever ``xs``
    holds, so values in a quadratic extension stay symbolic.
    """
    if k < 0:
        return 0
    chosen = list(xs) if subset is None else [xs[i] for i in subset]
    if k > len(chosen):
        return 0
    return esym_all(chosen)[k]


def esym_omit(xs, k: int, i: int):
    """``e_k(x_i)``: ``e_k`` of ``xs`` with entry ``i`` erased."""
    return esym(xs, k, [j for j in range(len(xs)) if j != i])


def power_sum(xs, m: int):
    """``sum(x**m for x in xs)``; ``m = 0`` gives ``len(xs)``."""
    if m < 0:
        raise ValueError("power sum exponent must be nonnegative")
    total = 0
    for x in xs:
        total = total + (x ** m if m else 1)
    return total
