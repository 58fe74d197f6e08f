from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nestedhilb.algebra import Laurent, TruncatedSeries
from nestedhilb.combinatorics import (Partition, ReversedPlanePartition, enumerate_partitions,
                                      enumerate_rpps)
from nestedhilb.invariants import (ANTIDIAGONAL, FULL, KTHEORY, SYMBOLIC, LocalCurveGeometry,
                                   Mode, conifold_check, conifold_product, cy_closed_series,
                                   cy_sign_check, euler_series, f_lambda, gw_pt_check, gw_series,
                                   leading_term, leading_term_closed, leading_term_euler,
                                   pt_euler_count, pt_euler_series, pt_integral, pt_local_series,
                                   pt_series_d, sample_modes, schur_principal,
                                   universal_series_closed, universal_series_extract)
from nestedhilb.invariants.appendix import (g_poly, h_poly, hook_identity, sigma, sign_identity,
                                            tau_product)
from nestedhilb.invariants.ktheory import ktheory_closed_check, ktheory_integral, ktheory_series
from nestedhilb.invariants.universal import extract_from_local
from nestedhilb.invariants.modes import default_seed, SEED_ENV

P = Partition.parse
R = ReversedPlanePartition.parse
q = sympy.symbols("q")
G = LocalCurveGeometry


def coeffs(s, lo, hi):
    return [s.coeff(k) for k in range(lo, hi)]


def sympy_coeffs(expr, lo, hi):
    poly = sympy.expand(sympy.series(expr, q, 0, hi).removeO())
    return [Fraction(str(poly.coeff(q, k))) for k in range(lo, hi)]


def const(c):
    return Laurent.constant(c)


def mono(c, e):
    return Laurent.monomial(Fraction(c), e)


@st.composite
def partitions(draw, lo=1, hi=6):
    d = draw(st.integers(lo, hi))
    return draw(st.sampled_from(enumerate_partitions(d)))


# -- modes ----------------------------------------------------------------------


def test_mode_validation(monkeypatch):
    with pytest.raises(ValueError):
        Mode(FULL, s1=1)
    with pytest.raises(ValueError):
        Mode(FULL, s1=1, s2=-1)
    with pytest.raises(ValueError):
        Mode(KTHEORY, r=-1)
    with pytest.raises(ValueError):
        Mode("nope")
    with pytest.raises(ValueError):
        G(-1, 0, 0)
    monkeypatch.setenv(SEED_ENV, "17")
    assert default_seed() == 17
    assert sample_modes(ANTIDIAGONAL, 3) == sample_modes(ANTIDIAGONAL, 3, 17)
    assert sample_modes(ANTIDIAGONAL, 3, 1) != sample_modes(ANTIDIAGONAL, 3, 2)
    monkeypatch.setenv(SEED_ENV, "x")
    with pytest.raises(ValueError):
        default_seed()


# -- integrals on P^1 -----------------------------------------------------------


def test_pt_integral_examples():
    assert pt_integral(R("1"), G(0, -1, -1)) == const(-2)
    assert pt_integral(R("2"), G(0, 0, 0)) == Laurent()
    assert pt_integral(R("0"), G(0, 0, 0)) == mono(-1, -2)
    with pytest.raises(ValueError):
        pt_integral(R("0"), G(1, 0, 0))


def test_cy_sign_examples():
    res = cy_sign_check(R("1"), -1, -1)
    assert res.passed and res.detail["sign"] == -1 and res.detail["fixed_points"] == 2
    assert cy_sign_check(R("0,0;0"), -1, -1).passed
    assert cy_sign_check(R("0,1"), 0, -2).passed
    with pytest.raises(ValueError):
        cy_sign_check(R("1"), 0, 0)


def test_local_series_examples():
    s = pt_local_series(P("1"), G(0, -1, -1), 3)
    assert coeffs(s, 0, 4) == [const(c) for c in sympy_coeffs((1 + q) ** -2, 0, 4)]
    s = pt_local_series(P("1"), G(0, 0, 0), 4)
    assert s.items() == [(0, mono(-1, -2))]
    s = pt_local_series(P("2"), G(0, -1, -1), 4)
    want = sympy_coeffs(-(1 - q ** 2) ** -2 * (1 + q) ** -2, 0, 5)
    assert coeffs(s, 0, 5) == [const(c) for c in want]


@pytest.mark.parametrize("lam", ["1", "2", "1,1", "2,1"])
@pytest.mark.parametrize("k1", [-1, 0, -2, 1])
def test_cy_closed_series_matches_localisation(lam, k1):
    lam = P(lam)
    got = pt_local_series(lam, G(0, k1, -2 - k1), 3)
    assert coeffs(got, 0, 4) == [const(c) for c in coeffs(cy_closed_series(lam, k1, 3), 0, 4)]


@given(st.sampled_from(["1", "2", "1,1", "2,1", "3"]), st.integers(0, 3), st.integers(-3, 1))
@settings(max_examples=25)
def test_cy_sign_property(lam, n, k1):
    for n_lam in enumerate_rpps(P(lam), n):
        assert cy_sign_check(n_lam, k1, -2 - k1).passed


def test_numeric_modes_agree_with_symbolic():
    for n_lam, geom in [(R("1"), G(0, 1, 0)), (R("0,1"), G(0, 2, -1)), (R("1;1"), G(0, 0, 1))]:
        sym = pt_integral(n_lam, geom)
        for m in sample_modes(ANTIDIAGONAL, 2, 3):
            assert pt_integral(n_lam, geom, m) == sym.evaluate(m.s1)


def test_full_mode_antidiagonal_limit():
    """Full-mode values approach the antidiagonal value along s2 = -s1 + eps (degree 0)."""
    n_lam, geom = R("1"), G(0, -1, -1)
    for eps in (Fraction(1, 10 ** 6), Fraction(-1, 10 ** 7)):
        v = pt_integral(n_lam, geom, Mode(FULL, s1=3, s2=-3 + eps))
        assert abs(v - (-2)) < 10 ** -4


# -- leading terms ----------------------------------------------------------------


def test_leading_term_examples():
    assert leading_term(P("1"), G(0, 0, 0)) == (mono(-1, -2), mono(-1, -2))
    assert leading_term(P("1"), G(1, 0, 0)) == (const(1), const(1))
    assert leading_term(P("1"), G(0, -1, -1)) == (const(1), const(1))
    assert leading_term(P("2,1"), G(0, 0, 0)) == (mono(Fraction(-1, 9), -6),) * 2
    # (-1)^(3 (2-1+0) + 1*1 + 1*0) (3 s1^3)^(2*2-2-1-0)
    assert leading_term(P("2,1"), G(2, 1, 0)) == (mono(3, 3), mono(3, 3))


@given(partitions(1, 4), st.integers(0, 3), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=40)
def test_leading_routes_agree(lam, g, k1, k2):
    euler, closed = leading_term(lam, G(g, k1, k2))
    assert euler == closed


def test_leading_term_closed_needs_antidiagonal():
    with pytest.raises(ValueError):
        leading_term_closed(P("1"), G(0, 0, 0), Mode(KTHEORY, r=2))


# -- universal series ---------------------------------------------------------------


def test_universal_closed_examples():
    u = universal_series_closed(P("1"), 4)
    assert u.A.items() == [(0, mono(-1, 2))]
    assert u.B.items() == [(0, mono(1, -1)), (1, mono(1, -1))]
    assert u.C.items() == [(0, mono(-1, -1)), (1, mono(-1, -1))]
    u = universal_series_closed(P("2,1"), 2)
    assert u.A.items() == [(0, mono(-9, 6))]
    r = Fraction(-3, 5)
    br = r - 1 / r
    assert f_lambda(P("1"), r) == 1 / br
    u = universal_series_closed(P("1"), 3, Mode(KTHEORY, r=r))
    assert u.A.items() == [(0, -br ** 2)]
    assert u.B.negate_argument().items() == [(0, 1 / br), (1, -1 / br)]
    with pytest.raises(ValueError):
        universal_series_closed(P(""), 3)
    with pytest.raises(ValueError):
        universal_series_closed(P("2"), 3, Mode(FULL, s1=1, s2=2))


@pytest.mark.parametrize("lam", ["1", "2"])
def test_universal_extract_examples(lam):
    lam = P(lam)
    assert universal_series_extract(lam, 6).first_mismatch(universal_series_closed(lam, 6)) is None


@pytest.mark.parametrize("lam", ["1", "2", "1,1", "2,1", "3"])
def test_extract_roundtrip_on_closed_inputs(lam):
    lam = P(lam)
    u = universal_series_closed(lam, 6)
    Z1 = u.A.inverse()
    Z2 = (u.A * u.B * u.C).inverse()
    Z3 = (u.A * u.C * u.C).inverse()
    back = extract_from_local(lam, Z1, Z2, Z3, u.C.coeff(0), SYMBOLIC)
    assert back.first_mismatch(u) is None


def test_full_degree_one():
    for m in sample_modes(FULL, 2, 11):
        got = universal_series_extract(P("1"), 5, m)
        assert got.A.items() == [(0, m.s1 * m.s2)]
        assert got.B.items() == [(0, 1 / m.s1), (1, 1 / m.s1)]
        assert got.C.items() == [(0, 1 / m.s2), (1, 1 / m.s2)]


@given(partitions(1, 3), st.integers(0, 2), st.integers(-2, 2), st.integers(-2, 2),
       st.integers(0, 2), st.integers(-2, 2), st.integers(-2, 2))
@settings(max_examples=30)
def test_local_series_multiplicative(lam, g1, a1, b1, g2, a2, b2):
    u = universal_series_closed(lam, 5)
    lhs = u.local_series(G(g1, a1, b1)) * u.local_series(G(g2, a2, b2))
    rhs = u.local_series(G(g1 + g2, a1 + a2, b1 + b2)) * u.A.inverse()
    assert lhs.first_mismatch(rhs) is None


# -- partition functions -------------------------------------------------------------


def test_pt_series_examples():
    s = pt_series_d(1, G(0, -1, -1), 5).negate_argument()
    assert coeffs(s, 0, 7) == [const(c) for c in sympy_coeffs(-q * (1 - q) ** -2, 0, 7)]
    s = pt_series_d(1, G(1, 0, 0), 4)
    assert s.items() == [(0, const(1))]
    s = pt_series_d(2, G(0, -1, -1), 7).negate_argument()
    slice2 = {b: c for (a, b), c in conifold_product(2, 10).items() if a == 2}
    assert [s.coeff(k) for k in range(11)] == [const(slice2.get(k, 0)) for k in range(11)]
    with pytest.raises(ValueError):
        pt_series_d(0, G(0, 0, 0), 3)
    with pytest.raises(ValueError):
        pt_series_d(2, G(0, 0, 0), 3, Mode(FULL, s1=1, s2=2))


@given(st.integers(1, 3), st.integers(0, 2), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=30)
def test_pt_routes_agree(d, g, k1, k2):
    geom = G(g, k1, k2)
    assert pt_series_d(d, geom, 4).first_mismatch(pt_series_d(d, geom, 4, route="display")) is None


def test_euler_series_examples():
    assert coeffs(euler_series(P("1"), 0, 5), 0, 6) == sympy_coeffs((1 - q) ** -2, 0, 6)
    assert euler_series(P("2,1"), 1, 5).items() == [(0, 1)]
    assert coeffs(euler_series(P("2,1"), 0, 6), 0, 7) == \
        sympy_coeffs((1 - q) ** -4 * (1 - q ** 3) ** -2, 0, 7)
    assert coeffs(pt_euler_series(1, G(0, 0, 0), 5), 0, 7) == \
        sympy_coeffs(q * (1 - q) ** -2, 0, 7)


@pytest.mark.parametrize("k", [(0, 0), (-1, -1), (1, -1), (0, -2)])
def test_euler_vs_count(k):
    for d in (1, 2, 3):
        geom = G(0, *k)
        assert pt_euler_series(d, geom, 5).first_mismatch(pt_euler_count(d, geom, 5)) is None


def test_gw_series_examples():
    gw = gw_series(1, G(0, -1, -1), 12)
    assert gw.i_power == 2
    want = sympy_coeffs(-q * (1 - q) ** -2, 0, 6)
    real = gw.real_series()
    assert [real[k] for k in range(6)] == [const(c) for c in want]
    assert [real[Fraction(2 * k + 1, 2)] for k in range(5)] == [const(0)] * 5
    gw = gw_series(1, G(1, 0, 0), 8)
    assert gw.real_series().items() == [(0, const(1))]
    gw = gw_series(1, G(0, -1, -1), 3)
    assert gw.series.items() == [(2, const(1))]


def test_gw_pt_examples():
    assert gw_pt_check(1, G(0, -1, -1), 8).passed
    assert gw_pt_check(1, G(1, 0, 0), 8).passed
    assert gw_pt_check(2, G(0, -1, -1), 8).passed
    with pytest.raises(ValueError):
        gw_pt_check(1, G(0, 0, 0), 0)


@given(st.integers(1, 3), st.integers(0, 2), st.integers(-3, 3), st.integers(-3, 3))
@settings(max_examples=30)
def test_gw_pt_property(d, g, k1, k2):
    res = gw_pt_check(d, G(g, k1, k2), 6)
    assert res.passed
    assert res.detail["i_power_total"] % 2 == 0


def test_conifold_examples():
    prod = conifold_product(1, 5)
    assert {b: c for (a, b), c in prod.items() if a == 1} == {n: -n for n in range(1, 6)}
    assert prod[(0, 0)] == 1
    res = conifold_check(1, 5)
    assert res.passed and len(res.detail["slices"]) == 2
    assert conifold_check(2, 10).passed


def test_schur_principal_against_hook_content():
    """s_l(1, q, q^2, ...) = q^n(l) / prod (1 - q^h)."""
    for d in range(1, 6):
        for lam in enumerate_partitions(d):
            expr = q ** sum(i * p for i, p in enumerate(lam.parts))
            for h in lam.hooks():
                expr /= 1 - q ** h
            assert coeffs(schur_principal(lam, 10), 0, 10) == sympy_coeffs(expr, 0, 10)


# -- K-theory -------------------------------------------------------------------------


def test_ktheory_examples():
    r = Fraction(-3, 5)
    m = Mode(KTHEORY, r=r)
    br = r - 1 / r
    # single box, n = 0: 1 / A = -F^2
    assert ktheory_integral(R("0"), G(0, 0, 0), m) == -1 / br ** 2
    s = ktheory_series(P("1"), G(0, -1, -1), 3, m)
    assert coeffs(s, 0, 4) == sympy_coeffs((1 + q) ** -2, 0, 4)
    assert ktheory_closed_check(P("2"), 3, m).passed
    with pytest.raises(ValueError):
        ktheory_series(P("1"), G(0, 0, 0), 3, SYMBOLIC)


def test_ktheory_cohomological_limit():
    """With t1^(1/2) = 1 + d, A_K / A_coh(s1 = r - 1/r) = 1 + O(d^2)."""
    for lam in (P("1"), P("2"), P("2,1")):
        errs = []
        for d in (Fraction(1, 100), Fraction(1, 1000)):
            r = 1 + d
            ak = universal_series_closed(lam, 0, Mode(KTHEORY, r=r)).A.coeff(0)
            ac = universal_series_closed(lam, 0, Mode(s1=r - 1 / r)).A.coeff(0)
            errs.append(abs(ak / ac - 1))
        assert errs[1] <= errs[0] / 50


# -- combinatorial identities -----------------------------------------------------


def test_appendix_examples():
    assert g_poly(P("1")) == {} and h_poly(P("1")) == {}
    absval, signed, hooks = hook_identity(P("2,1"))
    assert absval == hooks == 3
    assert signed == sigma(P("2,1")) * 3


@given(partitions(1, 9), st.integers(-4, 4), st.integers(-4, 4))
@settings(max_examples=40)
def test_appendix_property(lam, k1, k2):
    absval, signed, hooks = hook_identity(lam)
    assert absval == hooks and signed == sigma(lam) * hooks
    assert tau_product(lam) == 1
    lhs, rhs = sign_identity(lam, k1, k2)
    assert lhs == rhs
    g, h = g_poly(lam), h_poly(lam)
    assert {1 - e: c for e, c in g.items()} == g
    assert {1 - e: -c for e, c in h.items()} == h


def test_gw_odd_i_power_is_rejected():
    from nestedhilb.invariants import GWSeries
    with pytest.raises(ArithmeticError):
        GWSeries(TruncatedSeries.one(4), 1).real_series()
    assert GWSeries(TruncatedSeries.one(4), 2).real_series().coeff(0) == -1
