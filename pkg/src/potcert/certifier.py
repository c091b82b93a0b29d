"""Build the family ``H(c)``, state its claimed spectra, and certify them exactly.

The family is ``H = 1 1* + u u*`` with ``u = sqrt(c) (i, -1, -i, 1, 0)``, so
``H[j][k] = 1 + c i^(j-k)`` on the leading 4x4 block and 1 elsewhere. A
spectrum claim is certified by exact kernel dimensions at every claimed
eigenvalue; since the matrices are Hermitian, kernel dimensions summing to
the full size pin down the whole spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from .arith import C, I, GaussianRational, QuadExtScalar, UniPoly, as_gaussian, format_scalar
from .combinatorics import enumerate_k_subsets, esym, power_sum
from .errors import VerificationError
from .linalg import kernel_dim, nullspace, psd_shift_certificate, rayleigh
from .matrices import shift, trace
from .permanent import permanent
from .rank2 import FormalizedVector, per_principal_formalized, per_formalized
from .schur import ck_matrix, lift_subset_vector, schur_power

__all__ = [
    "CERTIFICATE_VERSION",
    "WITNESS_C",
    "SpectrumClaim",
    "EigenCheck",
    "TraceCheck",
    "Certificate",
    "CertificationFailed",
    "family_vector",
    "build_H",
    "target_matrix",
    "claimed_spectrum",
    "certify_spectrum",
    "trace_identities",
    "TraceReport",
    "c2_diagonal_table",
    "vanishing_witness",
    "VanishingReport",
    "certify_pot",
    "certify_pate_k2",
    "PER_POLY",
    "TRACE_PI_POLY",
    "TRACE_PI_SQ_POLY",
    "TRACE_C2_POLY",
    "C1_VALUES",
    "C2_EXTRA_VALUES",
    "parse_certificate",
    "per_family",
]

CERTIFICATE_VERSION = 1
WITNESS_C = Fraction(2)

PER_POLY = 120 + 24 * C ** 4
C1_VALUES = (120 * C, 40 * C ** 2, 40 * C ** 3, 24 * C ** 4)
C2_EXTRA_VALUES = (64 * C ** 3, 112 * C ** 2)

TRACE_PI_POLY = 120 * (1 + C) ** 4
TRACE_PI_SQ_POLY = 120 * (
    24 * (1 + C ** 4) ** 2
    + 128 * (C ** 6 + C ** 2)
    + 224 * C ** 4
    + 96 * (1 + C ** 2) ** 3
    + 64 * C ** 2 * (1 + C ** 2)
)
TRACE_C2_POLY = 120 + 48 * C ** 4 + 104 * C ** 3 + 152 * C ** 2 + 120 * C

TARGETS = ("pi", "c1", "c2")


class CertificationFailed(VerificationError):
    def __init__(self, message: str, certificate: Certificate | None = None):
        super().__init__(message)
        self.certificate = certificate


def _rational(c) -> Fraction:
    if isinstance(c, GaussianRational):
        if c.im:
            raise ValueError("c must be real")
        return c.re
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(c)


def family_vector(c) -> tuple[QuadExtScalar, ...]:
    """``sqrt(c) * (i, -1, -i, 1, 0)`` with the square root kept symbolic."""
    c = _rational(c)
    if c < 0:
        raise ValueError("the family needs c >= 0")
    s = QuadExtScalar.sqrt(c)
    return (s * I, -s, -s * I, s, QuadExtScalar(0, 0, c))


@lru_cache(maxsize=None)
def _H(c: Fraction):
    return tuple(tuple(row) for row in FormalizedVector(family_vector(c)).matrix())


def build_H(c) -> list[list[GaussianRational]]:
    c = _rational(c)
    if c < 0:
        raise ValueError("the family needs c >= 0")
    return [list(row) for row in _H(c)]


@lru_cache(maxsize=None)
def _target(target: str, c: Fraction, max_n: int):
    H = _H(c)
    if target == "pi":
        return schur_power(H, max_n=max_n)
    if target == "c1":
        return ck_matrix(H, 1)
    if target == "c2":
        return ck_matrix(H, 2)
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


def target_matrix(target: str, c, max_n: int = 5):
    """``pi(H(c))``, ``C_1(H(c))`` or ``C_2(H(c))``."""
    return _target(target, _rational(c), max_n)


# -- claims -------------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumClaim:
    target: str
    items: tuple  # ((UniPoly, multiplicity), ...)
    ambient: int

    def __post_init__(self):
        total = sum(m for _, m in self.items)
        if total != self.ambient:
            raise ValueError(f"multiplicities sum to {total}, not {self.ambient}")

    def at(self, c) -> tuple[list[tuple[GaussianRational, int, tuple[str, ...]]], list[str]]:
        """Evaluate at ``c`` and merge colliding values.

        Returns ``(entries, collisions)``; each entry is
        ``(value, multiplicity, source polynomials)``.
        """
        c = _rational(c)
        merged: dict = {}
        order = []
        for poly, m in self.items:
            val = poly(c)
            if val in merged:
                merged[val][0] += m
                merged[val][1].append(str(poly))
            else:
                merged[val] = [m, [str(poly)]]
                order.append(val)
        entries = [(v, merged[v][0], tuple(merged[v][1])) for v in order]
        collisions = [
            f"{' = '.join(src)} = {format_scalar(v)} at c={c}" for v, _, src in entries if len(src) > 1
        ]
        return entries, collisions


def claimed_spectrum(target: str) -> SpectrumClaim:
    zero = UniPoly()
    if target == "pi":
        items = [(PER_POLY, 1)] + [(p, 4) for p in C1_VALUES] + [(p, 5) for p in C2_EXTRA_VALUES]
        items.append((zero, 93))
        return SpectrumClaim("pi", tuple(items), 120)
    if target == "c1":
        return SpectrumClaim("c1", tuple((p, 1) for p in (PER_POLY, *C1_VALUES)), 5)
    if target == "c2":
        items = [(p, 1) for p in (PER_POLY, *C1_VALUES, *C2_EXTRA_VALUES)] + [(zero, 3)]
        return SpectrumClaim("c2", tuple(items), 10)
    raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")


# -- certificates ---------------------------------------------------------------

@dataclass(frozen=True)
class EigenCheck:
    value: GaussianRational
    claimed: int
    computed: int
    sources: tuple = ()

    @property
    def ok(self) -> bool:
        return self.claimed == self.computed


@dataclass(frozen=True)
class TraceCheck:
    name: str
    expected: GaussianRational
    computed: GaussianRational

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


@dataclass(frozen=True)
class Certificate:
    kind: str  # "spectrum", "pot", "pate-k2"
    c: Fraction
    target: str
    dimension: int
    eigen: tuple = ()
    traces: tuple = ()
    checks: tuple = ()  # (name, detail, ok)
    per: GaussianRational | None = None
    witness: GaussianRational | None = None
    verdict: str = ""
    notes: tuple = ()
    matrix: tuple = field(default=(), repr=False)

    @property
    def passed(self) -> bool:
        return (
            all(e.ok for e in self.eigen)
            and all(t.ok for t in self.traces)
            and all(ok for _, _, ok in self.checks)
        )

    def to_text(self) -> str:
        """Versioned line-oriented form; every number exact."""
        ok = lambda flag: "ok" if flag else "FAIL"  # noqa: E731
        lines = [
            f"potcert-certificate {CERTIFICATE_VERSION}",
            f"kind {self.kind}",
            f"c {self.c}",
            f"matrix hermitian {len(self.matrix)}",
        ]
        for row in self.matrix:
            lines.append("  " + " ".join(format_scalar(z) for z in row))
        lines.append(f"target {self.target} dimension {self.dimension}")
        for e in self.eigen:
            src = ",".join(e.sources) if e.sources else "-"
            lines.append(
                f"eigenvalue {format_scalar(e.value)} claimed {e.claimed} "
                f"kernel_dim {e.computed} from {src} {ok(e.ok)}"
            )
        for t in self.traces:
            lines.append(
                f"trace {t.name} expected {format_scalar(t.expected)} "
                f"computed {format_scalar(t.computed)} {ok(t.ok)}"
            )
        for name, detail, flag in self.checks:
            lines.append(f"check {name} {detail} {ok(flag)}")
        if self.per is not None:
            lines.append(f"per {format_scalar(self.per)}")
        if self.witness is not None:
            lines.append(f"witness {format_scalar(self.witness)}")
        for note in self.notes:
            lines.append(f"note {note}")
        lines.append(f"verdict {self.verdict}")
        lines.append("end")
        return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> dict:
    """Read back the fields of :meth:`Certificate.to_text` (no recomputation)."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("potcert-certificate "):
        raise ValueError("not a potcert certificate")
    out: dict = {"version": int(lines[0].split()[1]), "eigen": [], "traces": [], "checks": [], "notes": []}
    rows: list = []
    for line in lines[1:]:
        if line.startswith("  "):
            rows.append(line.split())
            continue
        key, _, rest = line.partition(" ")
        if key == "eigenvalue":
            f = rest.split()
            out["eigen"].append((f[0], int(f[2]), int(f[4]), f[-1] == "ok"))
        elif key == "trace":
            f = rest.split()
            out["traces"].append((f[0], f[2], f[4], f[-1] == "ok"))
        elif key == "check":
            out["checks"].append((rest.split()[0], rest.rsplit(" ", 1)[-1] == "ok"))
        elif key == "note":
            out["notes"].append(rest)
        elif key in ("kind", "c", "per", "witness", "verdict", "target", "matrix"):
            out[key] = rest
    out["rows"] = rows
    return out


def _trace_sq(M) -> GaussianRational:
    n = len(M)
    total = GaussianRational(0)
    for i in range(n):
        row = M[i]
        for j in range(n):
            total = total + row[j] * M[j][i]
    return total


def _certify(target: str, c: Fraction, claim: SpectrumClaim, max_n: int) -> Certificate:
    M = _target(target, c, max_n)
    entries, collisions = claim.at(c)
    eigen = tuple(EigenCheck(v, m, kernel_dim(M, v), src) for v, m, src in entries)
    sum1 = sum((v * m for v, m, _ in entries), GaussianRational(0))
    sum2 = sum((v * v * m for v, m, _ in entries), GaussianRational(0))
    traces = (
        TraceCheck("sum(m*lambda)=tr(M)", sum1, trace(M)),
        TraceCheck("sum(m*lambda^2)=tr(M^2)", sum2, _trace_sq(M)),
    )
    notes = tuple(f"merged colliding claims: {col}" for col in collisions)
    return Certificate(
        kind="spectrum",
        c=c,
        target=target,
        dimension=len(M),
        eigen=eigen,
        traces=traces,
        per=PER_POLY(c),
        verdict="",
        notes=notes,
        matrix=_H(c),
    )


@lru_cache(maxsize=None)
def _certify_cached(target: str, c: Fraction, max_n: int) -> Certificate:
    cert = _certify(target, c, claimed_spectrum(target), max_n)
    return replace(cert, verdict="PASS" if cert.passed else "FAIL")


def certify_spectrum(target: str, c, claim: SpectrumClaim | None = None, max_n: int = 5) -> Certificate:
    """Check every claimed eigenvalue's multiplicity and both trace moments."""
    c = _rational(c)
    if claim is None:
        return _certify_cached(target, c, max_n)
    cert = _certify(target, c, claim, max_n)
    return replace(cert, verdict="PASS" if cert.passed else "FAIL")


# -- trace identities and vanishing identities ---------------------------------

def c2_diagonal_table() -> tuple[tuple[tuple[int, int], UniPoly], ...]:
    """Diagonal entries of ``C_2(H)`` as polynomials in c, keyed by 1-based pairs.

    The printed table has no (3,5) row; it is filled in like the other (k,5)
    rows, which is what the printed trace total requires.
    """
    adjacent = (2 + 2 * C + 2 * C ** 2) * (6 + 4 * C + 2 * C ** 2)
    opposite = (2 + 2 * C ** 2) * (6 + 2 * C ** 2)
    with_last = (2 + C) * (6 + 2 * C + 2 * C ** 2 + 6 * C ** 3)
    rows = {
        (1, 2): adjacent, (1, 3): opposite, (1, 4): adjacent, (1, 5): with_last,
        (2, 3): adjacent, (2, 4): opposite, (2, 5): with_last,
        (3, 4): adjacent, (3, 5): with_last,
        (4, 5): with_last,
    }
    return tuple(sorted(rows.items()))


@dataclass(frozen=True)
class TraceReport:
    c: Fraction
    checks: tuple  # TraceCheck, closed form vs direct
    diagonal: tuple  # (pair, table value, closed-form e_k value, direct value)

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.checks) and all(a == b == d for _, a, b, d in self.diagonal)

    def value(self, name: str) -> GaussianRational:
        return next(t.computed for t in self.checks if t.name == name)


def trace_identities(c, max_n: int = 5) -> TraceReport:
    """Direct traces of ``pi``, ``pi^2`` and ``C_2`` against their closed forms."""
    c = _rational(c)
    if c < 0:
        raise ValueError("the family needs c >= 0")
    P = _target("pi", c, max_n)
    C2 = _target("c2", c, max_n)
    checks = (
        TraceCheck("tr(pi)", TRACE_PI_POLY(c), trace(P)),
        TraceCheck("tr(pi^2)", TRACE_PI_SQ_POLY(c), _trace_sq(P)),
        TraceCheck("tr(C_2)", TRACE_C2_POLY(c), trace(C2)),
    )
    x = family_vector(c)
    diagonal = []
    for r, ((p, q), poly) in enumerate(c2_diagonal_table()):
        I_ = (p - 1, q - 1)
        Ic = tuple(k for k in range(5) if k not in I_)
        closed = per_principal_formalized(x, I_) * per_principal_formalized(x, Ic)
        diagonal.append(((p, q), poly(c), closed, C2[r][r]))
    assert [pq for pq, *_ in diagonal] == [tuple(k + 1 for k in s) for s in enumerate_k_subsets(5, 2)]
    return TraceReport(c, checks, tuple(diagonal))


@dataclass(frozen=True)
class VanishingReport:
    c: Fraction
    esym: dict
    power_sums: dict

    @property
    def ok(self) -> bool:
        c = self.c
        return (
            all(self.esym[k] == 0 for k in (1, 2, 3, 5))
            and self.esym[4] == -c * c
            and all(self.power_sums[m] == 0 for m in (1, 2, 3, 5, 6, 7))
            and self.power_sums[4] == 4 * c * c
        )


def vanishing_witness(c) -> VanishingReport:
    """``e_k`` for k=1..5 and power sums for m=1..8 of the family vector."""
    c = _rational(c)
    x = family_vector(c)
    e = {k: as_gaussian(esym(x, k)) for k in range(1, 6)}
    p = {m: as_gaussian(power_sum(x, m)) for m in range(1, 9)}
    return VanishingReport(c, e, p)


# -- conjecture certificates ----------------------------------------------------

def _lift_check(c: Fraction, lam: GaussianRational, max_n: int):
    """Rayleigh quotient on ``pi`` of a lifted exact eigenvector of ``C_2`` (or ``C_1``)."""
    P = _target("pi", c, max_n)
    for k, name in ((2, "c2"), (1, "c1")):
        basis = nullspace(shift(_target(name, c, max_n), lam))
        if basis:
            w = lift_subset_vector(basis[0], 5, k)
            return name, rayleigh(P, w)
    return None, None


def certify_pot(c, max_n: int = 5) -> Certificate:
    """Compare ``per(H(c))`` with every other certified eigenvalue of ``pi(H(c))``."""
    c = _rational(c)
    if c < 0:
        raise ValueError("the family needs c >= 0")
    for target in ("c1", "c2", "pi"):
        cert = certify_spectrum(target, c, max_n=max_n)
        if not cert.passed:
            raise CertificationFailed(f"spectrum certificate for {target} failed at c={c}", cert)
    per = permanent(_H(c))
    checks = [("per(H)=120+24c^4", f"{format_scalar(per)}", per == PER_POLY(c))]
    others = [e.value for e in cert.eigen if e.value != per]
    top = max(others, key=lambda z: z.re) if others else None
    violated = top is not None and top.re > per.re
    notes = list(cert.notes)
    if violated:
        source, q = _lift_check(c, top, max_n)
        if source is None:
            checks.append(("rayleigh-lift", "no C_1/C_2 eigenvector for witness", False))
        else:
            checks.append(
                (f"rayleigh-lift-{source}", f"{q}>{format_scalar(per)}", q == top.re and q > per.re)
            )
        if c == WITNESS_C:
            from .tensor import witness_combination

            wr = witness_combination(c)
            lifted = lift_subset_vector(list(wr.subset_vector), 5, 2)
            q = rayleigh(_target("pi", c, max_n), lifted)
            checks.append(("rayleigh-tensor-witness", f"{q}>{format_scalar(per)}", q == top.re and q > per.re))
    out = replace(
        cert,
        kind="pot",
        checks=tuple(checks),
        per=per,
        witness=top if violated else None,
        verdict="VIOLATED" if violated else "HOLDS-ON-THIS-FAMILY",
        notes=tuple(notes),
    )
    if not out.passed:
        raise CertificationFailed(f"POT certificate checks failed at c={c}", out)
    return out


def certify_pate_k2(c, max_n: int = 5) -> Certificate:
    """Certify ``lambda_max(C_2(H(c)))`` by a kernel vector and a PSD shift."""
    c = _rational(c)
    if c < 0:
        raise ValueError("the family needs c >= 0")
    for target in ("c1", "c2"):
        cert = certify_spectrum(target, c, max_n=max_n)
        if not cert.passed:
            raise CertificationFailed(f"spectrum certificate for {target} failed at c={c}", cert)
    C2 = _target("c2", c, max_n)
    per = permanent(_H(c))
    lam = max((e.value for e in cert.eigen), key=lambda z: z.re)
    kd = kernel_dim(C2, lam)
    psd = psd_shift_certificate(C2, lam)
    checks = (
        ("per(H)=120+24c^4", format_scalar(per), per == PER_POLY(c)),
        ("kernel_dim(C_2-lambda_max)>=1", str(kd), kd >= 1),
        ("psd(lambda_max*I-C_2)", format_scalar(lam), psd),
    )
    violated = lam.re > per.re
    out = replace(
        cert,
        kind="pate-k2",
        checks=checks,
        per=per,
        witness=lam,
        verdict="VIOLATED" if violated else "HOLDS-ON-THIS-FAMILY",
    )
    if not out.passed:
        raise CertificationFailed(f"Pate k=2 certificate checks failed at c={c}", out)
    return out


def per_family(c) -> GaussianRational:
    """``per(H(c))`` by the elementary-symmetric closed form."""
    return per_formalized(family_vector(_rational(c)))
