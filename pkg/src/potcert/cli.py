"""Command-line front end.

Exit status: 0 when every check passed (including "conjecture violated as
claimed"), 1 on a computational mismatch, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from fractions import Fraction

from . import __version__
from .arith import ScalarSyntaxError, format_scalar, parse_scalar
from .certifier import (
    C1_VALUES,
    WITNESS_C,
    PER_POLY,
    TRACE_C2_POLY,
    TRACE_PI_POLY,
    TRACE_PI_SQ_POLY,
    build_H,
    certify_pate_k2,
    certify_pot,
    certify_spectrum,
    family_vector,
    target_matrix,
    trace_identities,
    vanishing_witness,
)
from .errors import ResourceLimitError, VerificationError
from .linalg import det_exact, rank_exact
from .matrices import add, outer
from .matrixio import MatrixSyntaxError, format_indexed, parse_matrix_file, serialize_matrix
from .permanent import permanent
from .rank2 import (
    FormalizedVector,
    Rank2Decomposition,
    c1_det,
    c1_eigenstructure,
    c1_rank,
    formalize,
    formalized_of,
    per_formalized,
    schur_rank_bound_check,
)
from .schur import ck_matrix, schur_power
from .tensor import family_forms, gram_permanent_check, witness_combination


class UsageError(Exception):
    pass


class Report:
    def __init__(self, timestamp: bool):
        self.lines = [f"potcert {__version__}"]
        if timestamp:
            self.lines.append(f"generated {datetime.now(timezone.utc).isoformat(timespec='seconds')}")
        self.failures = 0

    def line(self, text: str = ""):
        self.lines.append(text)

    def check(self, label: str, computed, expected=None, ok: bool | None = None, source: str = "claimed"):
        if ok is None:
            ok = expected is None or computed == expected
        shown = _fmt(computed)
        tail = f"  [{source}: {_fmt(expected)}]" if expected is not None else ""
        self.lines.append(f"{'ok  ' if ok else 'FAIL'} {label} = {shown}{tail}")
        if not ok:
            self.failures += 1

    def text(self) -> str:
        return "\n".join(self.lines) + "\n"


def _fmt(v) -> str:
    if isinstance(v, bool) or isinstance(v, str):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_fmt(x) for x in v) + "]"
    try:
        return format_scalar(v)
    except (TypeError, ValueError):
        return str(v)


def _parse_c(text: str) -> Fraction:
    try:
        c = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None
    return c


def _parse_vector(text: str) -> tuple:
    try:
        return tuple(parse_scalar(t) for t in text.split(","))
    except ScalarSyntaxError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load_matrix(args):
    if args.input:
        with open(args.input, encoding="utf-8") as fh:
            return [list(r) for r in parse_matrix_file(fh.read()).entries]
    return build_H(args.c)


# -- subcommands --------------------------------------------------------------

def cmd_permanent(args, rep: Report):
    A = _load_matrix(args)
    methods = ["naive", "ryser"] if args.method == "both" else [args.method]
    values = []
    for m in methods:
        v = permanent(A, method=m)
        values.append(v)
        rep.line(f"per[{m}] = {format_scalar(v)}")
    if len(values) == 2 and values[0] != values[1]:
        rep.check("naive == ryser", values[0], values[1], ok=False, source="ryser")


def cmd_schur(args, rep: Report):
    A = _load_matrix(args)
    P = schur_power(A, max_n=args.max_n)
    rep.line(format_indexed(P).rstrip("\n"))


def cmd_ck(args, rep: Report):
    A = _load_matrix(args)
    rep.line(format_indexed(ck_matrix(A, args.k)).rstrip("\n"))


def _decomposition(args) -> Rank2Decomposition:
    if args.v is None or args.u is None:
        raise UsageError("--v and --u are both required")
    return Rank2Decomposition(args.v, args.u)


def cmd_formalize(args, rep: Report):
    d = _decomposition(args)
    out = formalize(d)
    rep.line("v' = " + _fmt(out.v))
    rep.line("u' = " + _fmt(out.u))
    rep.line("x  = " + _fmt(formalized_of(out).x))
    before = add(outer(d.v, d.v), outer(d.u, d.u))
    after = add(outer(out.v, out.v), outer(out.u, out.u))
    rep.check("v'v'* + u'u'* == vv* + uu*", after == before, True, source="input")


def _c1_report(rep: Report, d: Rank2Decomposition, claimed=None):
    A = d.matrix()
    fd = formalize(d)
    x = formalized_of(fd)
    eig = c1_eigenstructure(x)
    n = d.n
    C1 = ck_matrix(x.matrix(), 1)
    rep.line(f"x = {_fmt(x.x)}")
    rep.check("per(H') closed form == permanent", eig.per, permanent(x.matrix()), source="ryser")
    rep.check("C_1(H') == (per/n)vv* + sum w_k v_k v_k*", eig.matrix() == [list(r) for r in C1], True, source="direct")
    rep.check("<v, v_k>", eig.orthogonality(), [0] * (n - 1), source="expected")
    for k, (w, vec) in enumerate(zip(eig.weights, eig.vectors), start=1):
        rep.line(f"weight_{k} = {w}  v_{k} = [{', '.join(str(z) for z in vec)}]")
    gram = eig.gram()
    orthogonal = all(not gram[i][j] for i in range(n) for j in range(n) if i != j)
    rep.line(f"(v, v_1..v_{n - 1}) pairwise orthogonal: {orthogonal}")
    if orthogonal:
        rep.check("C_1 eigenvalues", eig.eigenvalues(), claimed, source="claimed")
    rep.check("rank C_1 = #distinct x_i", c1_rank(x), rank_exact(ck_matrix(A, 1)), source="elimination")
    rep.check("det C_1 (closed form)", c1_det(d), det_exact(ck_matrix(A, 1)), source="elimination")


def cmd_c1_analyze(args, rep: Report):
    if args.v is not None or args.u is not None:
        _c1_report(rep, _decomposition(args))
        return
    c = args.c
    claimed = [PER_POLY(c)] + [p(c) for p in C1_VALUES]
    d = FormalizedVector(family_vector(c)).decomposition()
    rep.line(f"family H(c), c = {c}")
    _c1_report(rep, d, claimed)


def cmd_traces(args, rep: Report):
    tr = trace_identities(args.c, max_n=args.max_n)
    closed = {"tr(pi)": TRACE_PI_POLY, "tr(pi^2)": TRACE_PI_SQ_POLY, "tr(C_2)": TRACE_C2_POLY}
    for t in tr.checks:
        rep.check(f"{t.name} direct", t.computed, t.expected, source=f"closed form {closed[t.name]}")
    for (p, q), table, by_esym, direct in tr.diagonal:
        rep.check(f"C_2 diag ({p},{q})({p},{q})", direct, table, ok=direct == table == by_esym, source="table")
    rep.line("note: row (3,5)(3,5) is absent from the printed table; filled as (2+c)(6+2c+2c^2+6c^3)")
    vw = vanishing_witness(args.c)
    rep.line("e_k(u) = " + ", ".join(f"e{k}={format_scalar(v)}" for k, v in vw.esym.items()))
    rep.line("p_m(u) = " + ", ".join(f"p{m}={format_scalar(v)}" for m, v in vw.power_sums.items()))
    rep.check("vanishing witness (e1=e2=e3=e5=0, e4=-c^2, p_m=0 for 4∤m)", vw.ok, True, source="expected")


def cmd_gram_perm(args, rep: Report):
    forms = family_forms(args.c)
    per, normsq, equal = gram_permanent_check(forms)
    rep.check("per(Gram(f_1..f_5))", per, normsq, ok=equal, source="|f_1...f_5|^2")


def _emit(args, certs):
    if args.emit_certificate:
        with open(args.emit_certificate, "w", encoding="utf-8") as fh:
            fh.write("".join(c.to_text() for c in certs))


def cmd_certify(args, rep: Report):
    cert = certify_pot(args.c, max_n=args.max_n) if args.which == "pot" else certify_pate_k2(args.c, max_n=args.max_n)
    rep.line(cert.to_text().rstrip("\n"))
    _emit(args, [cert])


def cmd_demo(args, rep: Report):
    c = WITNESS_C
    H = build_H(c)
    rep.line("== the counterexample H = vv* + uu*, v = (1,...,1), u = sqrt(2)(i,-1,-i,1,0)")
    rep.line(serialize_matrix(H).rstrip("\n"))
    rep.line(f"rank(H) = {rank_exact(H)}")
    rep.line()
    rep.line("== permanent")
    rep.check("per(H) naive", permanent(H, "naive"), Fraction(504))
    rep.check("per(H) ryser", permanent(H, "ryser"), Fraction(504))
    rep.check("per(H) = sum k!(n-k)!|e_k|^2", per_formalized(family_vector(c)), Fraction(504))
    per, normsq, _ = gram_permanent_check(family_forms(c))
    rep.check("|f_1 f_2 f_3 f_4 f_5|^2", normsq, Fraction(504))
    rep.line()
    rep.line("== C_1(H)")
    d = FormalizedVector(family_vector(c)).decomposition()
    _c1_report(rep, d, [Fraction(v) for v in (504, 240, 160, 320, 384)])
    rep.line()
    rep.line("== rank bound")
    bound, actual = schur_rank_bound_check(d, max_n=5)
    rep.check("rank pi(H) <= 2^5 - 5", actual, bound)
    rep.line()
    rep.line("== traces")
    tr = trace_identities(c)
    for t, value in zip(tr.checks, (9720, 3900480, 2568)):
        rep.check(t.name, t.computed, Fraction(value), ok=t.ok and t.computed == value, source="closed form")
    rep.check("C_2 diagonal table", tr.ok, True, source="expected")
    rep.line()
    rep.line("== spectra (exact kernel dimensions)")
    claimed_mult = {"c1": None, "c2": None, "pi": {504: 1, 240: 4, 160: 4, 320: 4, 384: 4, 512: 5, 448: 5, 0: 93}}
    for target in ("c1", "c2", "pi"):
        cert = certify_spectrum(target, c)
        rep.line(f"-- {target} ({cert.dimension}x{cert.dimension})")
        for e in cert.eigen:
            expected = claimed_mult[target][e.value.re] if claimed_mult[target] else e.claimed
            rep.check(f"multiplicity of {format_scalar(e.value)}", e.computed, expected, ok=e.ok)
        for t in cert.traces:
            rep.check(t.name, t.computed, t.expected, source="claimed spectrum")
    rep.line()
    rep.line("== tensor witness")
    wr = witness_combination(c)
    rep.check("combination == 16√2 x^2⊗y^3 - 32√2 xy⊗xy^2 + 16√2 y^2⊗x^2y", wr.matches_target, True)
    rep.check("|coefficients|^2", wr.coeff_normsq, Fraction(24))
    rep.check("|combination|^2", wr.tensor_normsq, Fraction(12288))
    rep.check("Rayleigh quotient", wr.rayleigh, Fraction(512))
    rep.check("Rayleigh of Gram(F) at conj(coefficients)", wr.gram_rayleigh, Fraction(512), source="tensor norm")
    rep.line()
    rep.line("== certificates")
    pot = certify_pot(c)
    pate = certify_pate_k2(c)
    rep.line(pot.to_text().rstrip("\n"))
    rep.line(pate.to_text().rstrip("\n"))
    rep.check("POT verdict", pot.verdict, "VIOLATED", source="claimed")
    rep.check("Pate (k=2) verdict", pate.verdict, "VIOLATED", source="claimed")
    rep.line()
    rep.line("erratum: the printed C_2 diagonal table omits row (3,5)(3,5); its trace total")
    rep.line("  120+48c^4+104c^3+152c^2+120c holds only with that row equal to (2+c)(6+2c+2c^2+6c^3).")
    rep.line(f"summary: per = {format_scalar(pot.per)}; largest eigenvalue = {format_scalar(pot.witness)}; "
             f"POT {pot.verdict}; Pate(k=2) {pate.verdict}")
    _emit(args, [pot, pate])


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c", type=_parse_c, default=WITNESS_C, help="family parameter c = a^2 (default 2)")
    common.add_argument("--input", help="matrix file ('hermitian <n>' / 'matrix <n>' header)")
    common.add_argument("--max-n", type=int, default=5, help="largest n for the Schur power matrix")
    common.add_argument("--emit-certificate", metavar="PATH", help="write certificate text here")
    common.add_argument("--no-timestamp", action="store_true", help="omit the timestamp line")

    parser = argparse.ArgumentParser(prog="potcert", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("permanent", parents=[common], help="permanent of a matrix")
    p.add_argument("--method", choices=["naive", "ryser", "both"], default="ryser")
    p.set_defaults(func=cmd_permanent)

    p = sub.add_parser("schur", parents=[common], help="Schur power matrix with index legend")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("ck", parents=[common], help="C_k matrix with index legend")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(func=cmd_ck)

    for name, func, helptext in (
        ("formalize", cmd_formalize, "mix a rank-2 decomposition until v has no zero entry"),
        ("c1-analyze", cmd_c1_analyze, "C_1 decomposition, orthogonality, rank and determinant"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--v", type=_parse_vector, help="comma-separated entries of v")
        p.add_argument("--u", type=_parse_vector, help="comma-separated entries of u")
        p.set_defaults(func=func)

    p = sub.add_parser("certify", parents=[common], help="certify a conjecture verdict on H(c)")
    p.add_argument("which", choices=["pot", "pate"])
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("traces", parents=[common], help="trace identities and vanishing witnesses")
    p.set_defaults(func=cmd_traces)

    p = sub.add_parser("gram-perm", parents=[common], help="permanent of the Gram matrix of the family 1-forms")
    p.set_defaults(func=cmd_gram_perm)

    p = sub.add_parser("paper-demo", parents=[common], help="reproduce the 5x5 counterexample end to end")
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.c < 0:
        print("error: --c must be nonnegative", file=sys.stderr)
        return 2
    rep = Report(timestamp=not args.no_timestamp)
    try:
        args.func(args, rep)
    except (UsageError, MatrixSyntaxError, ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except VerificationError as exc:
        cert = getattr(exc, "certificate", None)
        if cert is not None:
            rep.line(cert.to_text().rstrip("\n"))
        stdout.write(rep.text())
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    stdout.write(rep.text())
    return 1 if rep.failures else 0


if __name__ == "__main__":
    sys.exit(main())
