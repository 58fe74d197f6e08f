"""Each suite must notice a planted error."""
from fractions import Fraction

from nestedhilb.invariants import suites
from nestedhilb.invariants.universal import UniversalSeriesTriple


def test_rpp_suite_detects(monkeypatch):
    real = suites.hook_product_series
    monkeypatch.setattr(suites, "hook_product_series",
                        lambda lam, p, prec: real(lam, p, prec) * Fraction(2) if lam.size == 3
                        else real(lam, p, prec))
    assert not suites.rpp_hook_suite(3, 4).passed


def test_p1_suite_detects(monkeypatch):
    real = suites._canon
    monkeypatch.setattr(suites, "_canon", lambda a, n0=0, ninf=0: real(a, ninf, n0))
    assert not suites.p1_identity_suite(range(-1, 2), 2).passed


def test_trivial_suite_detects(monkeypatch):
    monkeypatch.setattr(suites, "hook_product", lambda lam: 2)
    assert not suites.trivial_bundle_suite(2, 1, samples=1).passed


def test_cy_suite_detects(monkeypatch):
    real = suites.omega_fixed_point
    monkeypatch.setattr(suites, "omega_fixed_point",
                        lambda *a, **k: real(*a, **k) + real(*a, **k))
    res = suites.cy_suite(("2",), 1, ((-1, -1),), 2)
    assert not res.passed
    assert {f["check"] for f in res.detail["failures"]} >= {"serre"}


def test_universal_suite_detects(monkeypatch):
    real = suites.universal_series_closed

    def wrong(lam, N, mode):
        u = real(lam, N, mode)
        return UniversalSeriesTriple(lam, mode, u.A, u.B, -u.C)

    monkeypatch.setattr(suites, "universal_series_closed", wrong)
    assert not suites.universal_suite(1, 3).passed


def test_euler_suite_detects(monkeypatch):
    real = suites.pt_euler_count
    monkeypatch.setattr(suites, "pt_euler_count", lambda d, g, N: real(d, g, N).shift(1))
    assert not suites.euler_suite(1, ((0, 0),), 3).passed


def test_criteria_table():
    table = suites.criteria()
    assert [c[0] for c in table] == list(range(1, 14))
    res, elapsed = suites.run_criterion(2)
    assert res.passed and res.detail["criterion"] == 2 and elapsed >= 0
