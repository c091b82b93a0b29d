"""Bivariate polynomials with the ``|x^a y^b|^2 = a! b!`` inner product, and
two-factor tensors of them.

With this inner product the permanent of the Gram matrix of 1-forms
``f_j = alpha_j x + beta_j y`` equals ``|f_1 ... f_n|^2``, and ``C_2(H)`` of the
family matrix is the Gram matrix of the ten tensors ``F_{p,q}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .arith import ZERO, GaussianRational, I, QuadExtScalar, as_gaussian, conj, quad_reduce
from .combinatorics import complement
from .linalg import gram, rayleigh
from .permanent import permanent

__all__ = [
    "BivariatePoly",
    "TensorElement",
    "X",
    "Y",
    "one_form",
    "poly_inner",
    "product_of_forms",
    "gram_permanent_check",
    "tensor_inner",
    "family_forms",
    "build_F",
    "F_LABELS",
    "WITNESS_COEFFICIENTS",
    "witness_target",
    "witness_combination",
    "WitnessReport",
    "f_gram",
]


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


@dataclass(frozen=True)
class BivariatePoly:
    """Finitely supported map ``(deg_x, deg_y) -> coefficient``."""

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(dict(self.terms)))

    @classmethod
    def monomial(cls, dx: int, dy: int, coeff=1) -> BivariatePoly:
        return cls({(dx, dy): coeff})

    def __add__(self, other: BivariatePoly) -> BivariatePoly:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return BivariatePoly(out)

    def __neg__(self):
        return BivariatePoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            return BivariatePoly({k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for (a, b), u in self.terms.items():
            for (c, d), w in other.terms.items():
                key = (a + c, b + d)
                out[key] = out[key] + u * w if key in out else u * w
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def is_one_form(self) -> bool:
        return all(k in ((1, 0), (0, 1)) for k in self.terms)

    def inner(self, other: BivariatePoly):
        return poly_inner(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, reverse=True):
            mono = ("x" if a == 1 else f"x^{a}" if a else "") + ("y" if b == 1 else f"y^{b}" if b else "")
            parts.append(f"({self.terms[(a, b)]}){mono}")
        return " + ".join(parts)


X = BivariatePoly.monomial(1, 0)
Y = BivariatePoly.monomial(0, 1)


def one_form(alpha, beta) -> BivariatePoly:
    """``alpha x + beta y``."""
    return BivariatePoly({(1, 0): alpha, (0, 1): beta})


def _weight(key) -> int:
    a, b = key
    return factorial(a) * factorial(b)


def poly_inner(p: BivariatePoly, q: BivariatePoly):
    """Monomials orthogonal, ``<x^a y^b, x^a y^b> = a! b!``; conjugate-linear in ``q``."""
    total = ZERO
    for key, u in p.terms.items():
        w = q.terms.get(key)
        if w is not None:
            total = total + u * conj(w) * _weight(key)
    return quad_reduce(total)


def product_of_forms(forms) -> BivariatePoly:
    out = BivariatePoly({(0, 0): 1})
    for f in forms:
        if not isinstance(f, BivariatePoly) or not f.is_one_form():
            raise ValueError(f"not a 1-form: {f}")
        out = out * f
    return out


def gram_permanent_check(forms) -> tuple[GaussianRational, GaussianRational, bool]:
    """``(per(Gram(forms)), |prod forms|^2, equal)``."""
    forms = list(forms)
    if not forms:
        raise ValueError("need at least one form")
    G = [[as_gaussian(g) for g in row] for row in gram(forms)]
    per = permanent(G)
    prod = product_of_forms(forms)
    normsq = as_gaussian(poly_inner(prod, prod))
    return per, normsq, per == normsq


@dataclass(frozen=True)
class TensorElement:
    """Finite sum of monomial tensors, ``((dx, dy), (dx', dy')) -> coefficient``.

    Always stored expanded into monomial tensors, so equality is a literal
    comparison of canonical forms.
    """

    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(dict(self.terms)))

    @classmethod
    def simple(cls, left: BivariatePoly, right: BivariatePoly) -> TensorElement:
        """Bilinear expansion of ``left (x) right``."""
        out = {}
        for kl, u in left.terms.items():
            for kr, w in right.terms.items():
                out[(kl, kr)] = u * w
        return cls(out)

    def __add__(self, other: TensorElement) -> TensorElement:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return TensorElement(out)

    def __mul__(self, scalar) -> TensorElement:
        return TensorElement({k: v * scalar for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def inner(self, other: TensorElement):
        return tensor_inner(self, other)


def tensor_inner(s: TensorElement, t: TensorElement):
    """``<a (x) b, c (x) d> = <a, c> <b, d>`` extended sesquilinearly."""
    total = ZERO
    for key, u in s.terms.items():
        w = t.terms.get(key)
        if w is not None:
            kl, kr = key
            total = total + u * conj(w) * (_weight(kl) * _weight(kr))
    return quad_reduce(total)


def family_forms(c=2) -> list[BivariatePoly]:
    """``f_j = x + sqrt(c) i^j y`` for ``j = 1..4`` and ``f_5 = x``; Gram matrix is ``H(c)``."""
    s = QuadExtScalar.sqrt(c)
    one = QuadExtScalar(1, 0, c)
    forms = [one_form(one, s * (I ** j)) for j in range(1, 5)]
    forms.append(one_form(one, QuadExtScalar(0, 0, c)))
    return forms


def build_F(p: int, q: int, c=2, forms=None) -> TensorElement:
    """``F_{p,q} = f_p f_q (x) f_r f_s f_t`` with 1-based labels and ``{r,s,t}`` the rest."""
    if forms is None:
        forms = family_forms(c)
    n = len(forms)
    if p == q:
        raise ValueError("F_{p,q} needs p != q")
    if not (1 <= p <= n and 1 <= q <= n):
        raise ValueError(f"labels must lie in 1..{n}")
    pair = sorted((p - 1, q - 1))
    rest = complement(pair, n)
    left = product_of_forms(forms[i] for i in pair)
    right = product_of_forms(forms[i] for i in rest)
    return TensorElement.simple(left, right)


# label order matches the C_2 row order: pairs (p, q), p < q, lexicographic
F_LABELS = tuple((p, q) for p in range(1, 6) for q in range(p + 1, 6))

# the eight-term combination, keyed by the printed (unordered) labels
WITNESS_COEFFICIENTS = (
    ((4, 1), GaussianRational(1, 1)),
    ((1, 2), GaussianRational(-1, 1)),
    ((2, 3), GaussianRational(-1, -1)),
    ((3, 4), GaussianRational(1, -1)),
    ((5, 1), GaussianRational(0, -2)),
    ((5, 2), GaussianRational(2)),
    ((5, 3), GaussianRational(0, 2)),
    ((5, 4), GaussianRational(-2)),
)


def witness_target(c=2) -> TensorElement:
    """``16 sqrt2 x^2 (x) y^3 - 32 sqrt2 xy (x) xy^2 + 16 sqrt2 y^2 (x) x^2 y``."""
    s = QuadExtScalar.sqrt(c)
    x2, y3 = BivariatePoly.monomial(2, 0), BivariatePoly.monomial(0, 3)
    xy, xy2 = BivariatePoly.monomial(1, 1), BivariatePoly.monomial(1, 2)
    y2, x2y = BivariatePoly.monomial(0, 2), BivariatePoly.monomial(2, 1)
    return (
        TensorElement.simple(x2, y3) * (16 * s)
        + TensorElement.simple(xy, xy2) * (-32 * s)
        + TensorElement.simple(y2, x2y) * (16 * s)
    )


@dataclass(frozen=True)
class WitnessReport:
    tensor: TensorElement
    matches_target: bool
    coeff_normsq: Fraction
    tensor_normsq: Fraction
    rayleigh: Fraction
    gram_rayleigh: Fraction
    subset_vector: tuple  # conj(coefficients) placed on the C_2 index


def witness_combination(c=2) -> WitnessReport:
    """Evaluate the eight-term combination of ``F_{p,q}`` tensors.

    ``|sum w_a F_a|^2 = y* G y`` with ``G`` the Gram matrix of the ``F_a`` and
    ``y = conj(w)``, so ``gram_rayleigh`` is the Rayleigh quotient of ``G`` at
    the conjugated coefficients.
    """
    forms = family_forms(c)
    tensor = TensorElement()
    labels, coeffs, elements = [], [], []
    for (p, q), w in WITNESS_COEFFICIENTS:
        F = build_F(p, q, forms=forms)
        tensor = tensor + F * w
        labels.append((p, q))
        coeffs.append(w)
        elements.append(F)
    coeff_normsq = sum((w.abs2() for w in coeffs), Fraction(0))
    tensor_normsq = as_gaussian(tensor_inner(tensor, tensor)).re
    G = [[as_gaussian(g) for g in row] for row in gram(elements)]
    y = [w.conjugate() for w in coeffs]
    subset = [ZERO] * len(F_LABELS)
    for (p, q), w in zip(labels, y):
        subset[F_LABELS.index(tuple(sorted((p, q))))] = w
    return WitnessReport(
        tensor=tensor,
        matches_target=tensor == witness_target(c),
        coeff_normsq=coeff_normsq,
        tensor_normsq=tensor_normsq,
        rayleigh=tensor_normsq / coeff_normsq,
        gram_rayleigh=rayleigh(G, y),
        subset_vector=tuple(subset),
    )


def f_gram(c=2) -> list[list[GaussianRational]]:
    """Gram matrix of the ten ``F_{p,q}`` in ``F_LABELS`` order."""
    forms = family_forms(c)
    return [[as_gaussian(g) for g in row] for row in gram([build_F(p, q, forms=forms) for p, q in F_LABELS])]
