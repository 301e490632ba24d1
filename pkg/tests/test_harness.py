"""The verification harness: statuses, known discrepancies, determinism."""

from fractions import Fraction

import pytest

from sturmion import grids, harness


def test_duality_exact_on_rational_grids():
    for spec in (grids.linear(2),
                 grids.quadratic(Fraction(1), 3),
                 grids.quadratic(Fraction(2), 3),
                 grids.exponential(Fraction(1, 2), 1)):
        rep = harness.verify_legendre_duality(spec)
        assert rep.status == harness.EXACT
        assert rep.residual is None


def test_duality_toleranced_on_trig_grids():
    rep = harness.verify_legendre_duality(grids.trig_first(4))
    assert rep.status == harness.TOLERANCE
    assert rep.residual < Fraction(1, 2**200)


def test_linear_report():
    for n in (1, 2, 5):
        rep = harness.verify_linear(n)
        assert rep.status == harness.EXACT
        assert rep.witness is None


def test_quadratic_tau1_report_flags_known_discrepancy():
    rep = harness.verify_quadratic_tau1(2)
    assert rep.status == harness.EXACT
    joined = " ".join(rep.notes)
    assert "known-discrepancy" in joined
    assert "655/192" in joined
    assert "8/3" in joined


def test_quadratic_tau2_report():
    for n in (1, 2, 4):
        rep = harness.verify_quadratic_tau2(n)
        assert rep.status == harness.EXACT
    assert any("known-discrepancy" in note
               for note in harness.verify_quadratic_tau2(1).notes)


def test_exponential_report():
    for q in (Fraction(1, 2), Fraction(2, 3)):
        rep = harness.verify_exponential(q, 3)
        assert rep.status == harness.EXACT


def test_trig_reports():
    for kind in (1, 2):
        rep = harness.verify_trig(kind, 3)
        assert rep.status == harness.TOLERANCE
        assert rep.residual < Fraction(1, 2**200)


def test_trig_kind_validation():
    with pytest.raises(ValueError):
        harness.verify_trig(3, 2)


def test_run_all_minimal_shape():
    reports = harness.run_all(1, (Fraction(1, 2),))
    assert len(reports) == 7
    assert [r.name for r in reports] == [
        "legendre_duality", "linear_hahn", "quadratic_tau1_racah",
        "quadratic_tau2_christoffel", "exponential_qhahn",
        "trig_first", "trig_second"]
    for r in reports:
        assert r.status in (harness.EXACT, harness.TOLERANCE)


def test_run_all_rejects_bad_nmax():
    with pytest.raises(ValueError):
        harness.run_all(0)


def test_reports_serialize_deterministically():
    a = harness.reports_to_json(harness.run_all(2, (Fraction(1, 2),)))
    b = harness.reports_to_json(harness.run_all(2, (Fraction(1, 2),)))
    assert a == b
    assert "655/192" in a


def test_report_witness_on_forced_mismatch():
    col = harness._Collector()
    col.eq("b_0", Fraction(1), Fraction(2))
    rep = col.report("demo", "linear", 1)
    assert rep.status == harness.MISMATCH
    assert rep.witness == ("b_0", Fraction(1), Fraction(2))
    d = rep.to_dict()
    assert d["witness"]["oracle"] == "1"
    assert d["witness"]["candidate"] == "2"
