"""Exact scalars: Gaussian rationals, one quadratic extension, and polynomials in c.

Rationals are :class:`fractions.Fraction`. Every class here is immutable and
kept in canonical form, so ``==`` is value equality and hashing is safe.
"""

from __future__ import annotations

import re
from math import isqrt
from fractions import Fraction
from numbers import Rational as _RationalABC

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "QuadExtScalar",
    "UniPoly",
    "I",
    "abs2",
    "as_gaussian",
    "conj",
    "quad_reduce",
    "poly_eval",
    "parse_scalar",
    "format_scalar",
    "ScalarSyntaxError",
]


def _rational_sqrt(c: Fraction):
    """Exact square root of ``c`` if it is a rational square, else None."""
    rn, rd = isqrt(c.numerator), isqrt(c.denominator)
    if rn * rn == c.numerator and rd * rd == c.denominator:
        return Fraction(rn, rd)
    return None


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> GaussianRational:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    # -- coercion -----------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(Fraction(other), Fraction(0))
        return None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._make(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational._make(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational._make(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self):
        return GaussianRational._make(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, m: int):
        if not isinstance(m, int):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        result = ONE
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def inverse(self) -> GaussianRational:
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational._make(self.re / n, -self.im / n)

    def conjugate(self) -> GaussianRational:
        return GaussianRational._make(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, QuadExtScalar):
                return other == self
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def as_gaussian(x) -> GaussianRational:
    """Coerce an int, Fraction or fully reduced QuadExtScalar to Q(i)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, QuadExtScalar):
        r = quad_reduce(x)
        if isinstance(r, GaussianRational):
            return r
        raise ValueError(f"{x!r} has a nonzero sqrt({x.c}) part")
    raise TypeError(f"cannot coerce {type(x).__name__} to GaussianRational")


def conj(x):
    """Complex conjugate for any scalar in this module (ints pass through)."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.conjugate()


def abs2(z) -> Fraction:
    """``|z|^2`` of a Gaussian rational."""
    return as_gaussian(z).abs2()


class QuadExtScalar:
    """``p + q*s`` with ``s**2 == c``, ``p, q`` in Q(i) and rational ``c >= 0``.

    ``s`` is a real square root, so conjugation fixes it. Operands must share
    the same ``c``. When ``c`` is a rational square, ``s`` is folded into
    ``p`` so equal values always have equal representations.
    """

    __slots__ = ("p", "q", "c")

    def __init__(self, p=0, q=0, c=0):
        c = _frac(c)
        if c < 0:
            raise ValueError("QuadExtScalar needs c >= 0 (real square root)")
        p, q = as_gaussian(p), as_gaussian(q)
        if q:
            root = _rational_sqrt(c)
            if root is not None:
                p, q = p + q * root, ZERO
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "c", c)

    def __setattr__(self, name, value):
        raise AttributeError("QuadExtScalar is immutable")

    def __reduce__(self):
        return (QuadExtScalar, (self.p, self.q, self.c))

    @classmethod
    def sqrt(cls, c) -> QuadExtScalar:
        """The generator ``s`` itself."""
        return cls(0, 1, c)

    def _coerce(self, other):
        if isinstance(other, QuadExtScalar):
            if other.c != self.c:
                raise ValueError(f"mixed moduli: sqrt({self.c}) vs sqrt({other.c})")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return QuadExtScalar(other, 0, self.c)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(self.p + o.p, self.q + o.q, self.c)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExtScalar(self.p - o.p, self.q - o.q, self.c)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.p * o.p + self.q * o.q * self.c
        q = self.p * o.q + self.q * o.p
        return QuadExtScalar(p, q, self.c)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExtScalar(-self.p, -self.q, self.c)

    def __pow__(self, m: int):
        if not isinstance(m, int) or m < 0:
            return NotImplemented
        result = QuadExtScalar(1, 0, self.c)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def inverse(self) -> QuadExtScalar:
        # (p + qs)^-1 = (p - qs) / (p^2 - q^2 c)
        n = self.p * self.p - self.q * self.q * self.c
        if not n:
            raise ZeroDivisionError(f"{self!r} is not invertible")
        return QuadExtScalar(self.p / n, -self.q / n, self.c)

    def conjugate(self) -> QuadExtScalar:
        return QuadExtScalar(self.p.conjugate(), self.q.conjugate(), self.c)

    def __eq__(self, other):
        if isinstance(other, QuadExtScalar):
            return self.c == other.c and self.p == other.p and self.q == other.q
        if isinstance(other, (int, Fraction, GaussianRational)):
            return not self.q and self.p == other
        return NotImplemented

    def __hash__(self):
        if not self.q:
            return hash(self.p)
        return hash((self.p, self.q, self.c))

    def __bool__(self):
        return bool(self.p) or bool(self.q)

    def __repr__(self):
        return f"QuadExtScalar({self.p}, {self.q}, c={self.c})"

    def __str__(self):
        if not self.q:
            return str(self.p)
        q = str(self.q)
        root = f"sqrt({self.c})" if q == "1" else f"({q})sqrt({self.c})"
        return root if not self.p else f"{self.p}+{root}"


def quad_reduce(z):
    """Drop to Q(i) when the square-root part vanishes; otherwise return ``z``."""
    if isinstance(z, QuadExtScalar) and not z.q:
        return z.p
    if isinstance(z, (int, Fraction)):
        return GaussianRational(z)
    return z


class UniPoly:
    """Univariate polynomial in ``c`` with Gaussian-rational coefficients.

    ``coefficients[d]`` multiplies ``c**d``; trailing zeros are trimmed.
    """

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [as_gaussian(a) for a in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def from_terms(cls, terms: dict[int, object]) -> UniPoly:
        """Build from ``{degree: coefficient}``."""
        if not terms:
            return cls()
        coeffs = [0] * (max(terms) + 1)
        for d, a in terms.items():
            coeffs[d] = a
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, c):
        return poly_eval(self, c)

    def _coerce(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return UniPoly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coefficients, o.coefficients
        n = max(len(a), len(b))
        return UniPoly(
            (a[k] if k < len(a) else ZERO) + (b[k] if k < len(b) else ZERO) for k in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-a for a in self.coefficients)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coefficients, o.coefficients
        if not a or not b:
            return UniPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, m: int):
        result = UniPoly([1])
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coefficients == o.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return f"UniPoly({str(self)!r})"

    def __str__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for d, a in enumerate(self.coefficients):
            if not a:
                continue
            mono = "" if d == 0 else ("c" if d == 1 else f"c^{d}")
            if a.im == 0:
                coef = str(a.re)
                if mono and a.re == 1:
                    coef = ""
                elif mono and a.re == -1:
                    coef = "-"
            else:
                coef = f"({format_scalar(a)})"
            parts.append(coef + mono)
        out = "+".join(parts)
        return out.replace("+-", "-")


C = UniPoly([0, 1])


def poly_eval(p: UniPoly, c) -> GaussianRational:
    """Horner evaluation of ``p`` at ``c``."""
    c = as_gaussian(c)
    acc = ZERO
    for a in reversed(p.coefficients):
        acc = acc * c + a
    return acc


# -- textual syntax ---------------------------------------------------------

class ScalarSyntaxError(ValueError):
    """Malformed scalar text; ``column`` is 1-based within the entry."""

    def __init__(self, message: str, text: str, column: int = 1):
        super().__init__(f"{message}: {text!r} (column {column})")
        self.text = text
        self.column = column


_NUM = r"\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?P<re>[+-]?{_NUM})?(?:(?P<im>[+-]?(?:{_NUM})?)i)?$"
)


def _first_bad_column(s: str) -> int:
    # longest prefix that still matches some valid entry's prefix
    for k in range(len(s), 0, -1):
        prefix = s[:k]
        for tail in ("", "1", "1i", "i", "/1", "/1i"):
            if _SCALAR_RE.match(prefix + tail) and (prefix + tail) != "":
                return k + 1
    return 1


def parse_scalar(text: str) -> GaussianRational:
    """Parse ``a/b``, ``a/b+c/di``, ``-2i``, ``1+2i``, ``i`` and friends."""
    s = "".join(text.split())
    m = _SCALAR_RE.match(s)
    if not s or m is None or (m.group("re") is None and m.group("im") is None):
        raise ScalarSyntaxError("malformed scalar", text, _first_bad_column(s))
    re_txt, im_txt = m.group("re"), m.group("im")
    if re_txt is not None and im_txt == "":
        # "2i", "-3/4i": the regex hands the coefficient to the real group
        re_txt, im_txt = None, re_txt
    if re_txt is not None and im_txt is not None and im_txt[:1] not in ("+", "-"):
        raise ScalarSyntaxError("missing sign before imaginary part", text, len(re_txt) + 1)
    try:
        real = Fraction(re_txt) if re_txt is not None else Fraction(0)
        if im_txt is None:
            imag = Fraction(0)
        elif im_txt in ("", "+"):
            imag = Fraction(1)
        elif im_txt == "-":
            imag = Fraction(-1)
        else:
            imag = Fraction(im_txt)
    except ZeroDivisionError:
        raise ScalarSyntaxError("zero denominator", text, s.index("/") + 2) from None
    return GaussianRational(real, imag)


def format_scalar(z) -> str:
    """Canonical text for a Gaussian rational; inverse of :func:`parse_scalar`."""
    z = as_gaussian(z)
    re_part, im_part = z.re, z.im
    if im_part == 0:
        return str(re_part)
    if im_part == 1:
        im_txt = "i"
    elif im_part == -1:
        im_txt = "-i"
    else:
        im_txt = f"{im_part}i"
    if re_part == 0:
        return im_txt
    sign = "" if im_txt.startswith("-") else "+"
    return f"{re_part}{sign}{im_txt}"
