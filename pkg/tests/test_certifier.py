from fractions import Fraction

import pytest

from potcert.arith import C, GaussianRational, UniPoly
from potcert.certifier import (
    C1_VALUES,
    C2_EXTRA_VALUES,
    PER_POLY,
    SpectrumClaim,
    build_H,
    c2_diagonal_table,
    certify_pate_k2,
    certify_pot,
    certify_spectrum,
    claimed_spectrum,
    family_vector,
    parse_certificate,
    per_family,
    target_matrix,
    trace_identities,
    vanishing_witness,
)
from potcert.linalg import kernel_dim
from potcert.matrices import ones_matrix, trace
from potcert.permanent import permanent
from potcert.schur import ck_matrix

G = GaussianRational


def test_build_H():
    H = build_H(2)
    assert H[0] == [3, G(1, -2), -1, G(1, 2), 1]
    assert build_H(0) == ones_matrix(5)
    with pytest.raises(ValueError):
        build_H(-1)


@pytest.mark.parametrize("c", [0, 1, 2, 3, Fraction(1, 2)])
def test_per_family(c):
    assert per_family(c) == PER_POLY(c) == permanent(build_H(c))


def test_claimed_spectra():
    assert {m for _, m in claimed_spectrum("pi").items} == {1, 4, 5, 93}
    entries, _ = claimed_spectrum("pi").at(2)
    assert [(v, m) for v, m, _ in entries] == [
        (504, 1), (240, 4), (160, 4), (320, 4), (384, 4), (512, 5), (448, 5), (0, 93),
    ]
    entries, _ = claimed_spectrum("pi").at(0)
    assert [(v, m) for v, m, _ in entries] == [(120, 1), (0, 119)]
    with pytest.raises(ValueError):
        claimed_spectrum("c3")
    with pytest.raises(ValueError):
        SpectrumClaim("c1", ((PER_POLY, 1),), 5)


def test_collisions_are_merged():
    entries, collisions = claimed_spectrum("c1").at(1)
    values = dict((v, m) for v, m, _ in entries)
    assert values[G(40)] == 2 and len(collisions) == 1


def test_c1_and_c2_certificates():
    c1 = certify_spectrum("c1", 2)
    assert c1.passed and c1.verdict == "PASS"
    assert [e.value for e in c1.eigen] == [504, 240, 160, 320, 384]
    c2 = certify_spectrum("c2", 2)
    assert c2.passed


def _replace_value(claim, old, new):
    items = tuple((new if p == old else p, m) for p, m in claim.items)
    return SpectrumClaim(claim.target, items, claim.ambient)


def test_falsification_control_c2():
    claim = _replace_value(claimed_spectrum("c2"), C2_EXTRA_VALUES[0], UniPoly([511]))
    cert = certify_spectrum("c2", 2, claim=claim)
    assert not cert.passed and cert.verdict == "FAIL"


@pytest.mark.slow
def test_falsification_control_pi():
    claim = _replace_value(claimed_spectrum("pi"), C2_EXTRA_VALUES[0], UniPoly([511]))
    cert = certify_spectrum("pi", 2, claim=claim)
    assert not cert.passed
    bad = [e for e in cert.eigen if not e.ok]
    assert [(e.value, e.computed) for e in bad] == [(511, 0)]


@pytest.mark.parametrize("c", [0, 1, 2, 3])
def test_c2_spectrum_other_c(c):
    assert certify_spectrum("c2", c).passed


@pytest.mark.parametrize("c", [0, 1, 2, 3])
def test_trace_identities(c):
    report = trace_identities(c)
    assert report.ok


def test_trace_values():
    assert [t.computed for t in trace_identities(2).checks] == [9720, 3900480, 2568]
    assert [t.computed for t in trace_identities(0).checks] == [120, 14400, 120]


def test_diagonal_table_includes_missing_row():
    table = dict(c2_diagonal_table())
    assert (3, 5) in table and table[(3, 5)] == table[(2, 5)]
    assert sum((p for p in table.values()), UniPoly()) == 120 + 48 * C**4 + 104 * C**3 + 152 * C**2 + 120 * C


@pytest.mark.parametrize("c", [0, 1, 2, 5])
def test_vanishing_witness(c):
    vw = vanishing_witness(c)
    assert vw.ok
    assert vw.esym[4] == -c * c
    assert vw.power_sums[4] == 4 * c * c


def test_pate_certificates():
    cert = certify_pate_k2(2)
    assert cert.verdict == "VIOLATED" and cert.witness == 512 and cert.per == 504
    assert certify_pate_k2(0).verdict == "HOLDS-ON-THIS-FAMILY"


def test_pot_holds_at_small_c():
    assert certify_pot(0).verdict == "HOLDS-ON-THIS-FAMILY"
    cert = certify_pot(1)
    assert cert.verdict == "HOLDS-ON-THIS-FAMILY"
    assert cert.per == 144
    assert max(e.value.re for e in cert.eigen if e.value != cert.per) == 120


def test_pot_violated_at_two():
    cert = certify_pot(2)
    assert cert.verdict == "VIOLATED"
    assert cert.witness == 512 and cert.per == 504
    names = [name for name, _, ok in cert.checks if ok]
    assert "rayleigh-tensor-witness" in names and "rayleigh-lift-c2" in names


def test_certificate_text_round_trip():
    cert = certify_pate_k2(2)
    text = cert.to_text()
    assert text == certify_pate_k2(2).to_text()
    back = parse_certificate(text)
    assert back["verdict"] == "VIOLATED" and back["witness"] == "512"
    assert len(back["rows"]) == 5
    assert all(ok for *_, ok in back["eigen"])


def test_rescaling_scales_spectrum():
    # C_2(tH) = t^5 C_2(H): kernel dimensions move with the eigenvalues
    H = build_H(2)
    t = 2
    C2 = ck_matrix([[t * z for z in row] for row in H], 2)
    assert kernel_dim(C2, 512 * t**5) == 1
    assert trace(C2) == 2568 * t**5


@pytest.mark.parametrize("c", [1, 2])
def test_target_matrix(c):
    assert target_matrix("c1", c).entries == ck_matrix(build_H(c), 1).entries


def test_family_vector_length():
    assert len(family_vector(2)) == 5


def test_c1_values_match_closed_forms():
    assert [p(2) for p in C1_VALUES] == [240, 160, 320, 384]
