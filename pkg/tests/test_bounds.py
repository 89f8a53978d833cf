from fractions import Fraction

import pytest

from optcurves.bounds import (
    AuditFinding,
    BoundContext,
    exceptional_curve_data,
    exceptional_divisibility_audit,
    hws_interval,
    improved_bound_applies,
    improved_interval,
    legendre_mod5_audit,
    no_field_audit,
    ordinary_audit,
    run_all_audits,
    serre_aut_bound,
    singh_bound,
    singh_vs_half_order_audit,
    table1_vs_serre_audit,
)


def test_hws_interval():
    assert hws_interval(BoundContext(23, 1)) == (15, 33)
    assert hws_interval(BoundContext(23, 0)) == (24, 24)
    assert hws_interval(BoundContext(47, 5)) == (48 - 65, 48 + 65)


def test_improved_bound_rows():
    applies, _ = improved_bound_applies(BoundContext(23, 4))
    assert applies
    assert improved_interval(BoundContext(23, 4)) == (23 + 1 - 34, 23 + 1 + 34)
    assert not improved_bound_applies(BoundContext(23, 2))[0]
    assert not improved_bound_applies(BoundContext(61, 5))[0]  # 61 = 1 mod 5
    assert improved_bound_applies(BoundContext(47, 5))[0]  # d=-19, 47 = 2 mod 5
    assert improved_bound_applies(BoundContext(47, 4))[0]
    assert not improved_bound_applies(BoundContext(3, 4))[0]  # d(3) = -3, q = 3
    assert not improved_bound_applies(BoundContext(97, 4))[0]  # d = -27 unsupported
    # d=-11 genus 4 requires p != 3: q = 243 = 3^5 is excluded
    assert not improved_bound_applies(BoundContext(243, 4))[0]
    assert improved_bound_applies(BoundContext(243, 5))[0] is False  # p = 3 < 5


def test_improved_interval_width_reduction():
    lo, hi = hws_interval(BoundContext(23, 4))
    ilo, ihi = improved_interval(BoundContext(23, 4))
    assert (ilo, ihi) == (lo + 2, hi - 2)


def test_singh_bound_exact():
    assert singh_bound(2, 6) == 288 * 13 * 289 == 1082016
    assert singh_bound(2, 1) == 8 * 3 * 9 == 216
    v = singh_bound(3, 4)
    assert isinstance(v, Fraction)
    assert v == Fraction(4 * 3 * 16, 2) * (Fraction(8, 2) + 1) * (Fraction(4 * 3 * 16, 4) + 1)
    with pytest.raises(ValueError):
        singh_bound(1, 3)
    with pytest.raises(ValueError):
        singh_bound(2, 0)


def test_serre_aut_bound():
    assert serre_aut_bound(7, False) == 1008
    assert serre_aut_bound(2, True) == 84
    assert serre_aut_bound(5, True) == 336
    assert 2**3 * 3 * 5 * 11 > serre_aut_bound(5, True)
    with pytest.raises(ValueError):
        serre_aut_bound(1, False)


def test_exceptional_curve_data():
    assert exceptional_curve_data(7) == {"p": 7, "g": 3, "aut_order": 672}
    assert exceptional_curve_data(11)["aut_order"] == 2640
    assert exceptional_curve_data(3) == {"p": 3, "g": 1, "aut_order": 48}
    for p in (3, 5, 7, 11, 13):
        assert exceptional_curve_data(p)["aut_order"] % (2 * p) == 0
    with pytest.raises(ValueError):
        exceptional_curve_data(2)


def test_singh_vs_half_order_all_pass():
    findings = singh_vs_half_order_audit()
    assert len(findings) == 20  # 5 primes x 4 ranks
    assert all(not f.flagged for f in findings)


def test_table1_vs_serre_all_pass():
    findings = table1_vs_serre_audit()
    assert findings
    assert all(not f.flagged for f in findings)


def test_exceptional_audit_expected_flags():
    findings = exceptional_divisibility_audit()
    flags = [f for f in findings if f.flagged]
    assert {f.claim for f in flags} == {
        "exceptional-order p=11",
        "exceptional-divisibility p=7 g=3 d=-7",
    }


def test_no_field_audit_positive_and_negative():
    f = no_field_audit(-4, (2, 3, 7, 11), q_max=2**20, exclude=(2,))
    assert not f[0].flagged
    f = no_field_audit(-8, (2, 5, 7), q_max=2**20)
    assert not f[0].flagged
    # negative control: q = 23 really is a d=-11 field of characteristic 23
    f = no_field_audit(-11, (23,), q_max=100)
    assert f[0].flagged
    assert "23" in f[0].evidence


def test_ordinary_audit():
    findings = ordinary_audit(10**4)
    assert len(findings) == 6
    assert all(not f.flagged for f in findings)


def test_legendre_mod5_audit():
    findings = legendre_mod5_audit(10**4)
    assert not findings[0].flagged
    assert "47: 2" in findings[0].evidence
    assert "61: 1" in findings[0].evidence


def test_run_all_audits_exactly_two_flags():
    findings = run_all_audits(q_max=2**24)
    flags = [f for f in findings if f.flagged]
    assert {f.claim for f in flags} == {
        "exceptional-order p=11",
        "exceptional-divisibility p=7 g=3 d=-7",
    }


def test_audit_finding_api():
    f = AuditFinding(claim="x", status="flag", evidence="e")
    assert f.flagged
    assert not AuditFinding("x", "pass", "e").flagged
