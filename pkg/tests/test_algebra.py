from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nestedhilb.algebra import (BracketProduct, FactoredRational, Laurent, TruncatedSeries,
                                UniTerm, hook_factor, sum_terms_at)
from nestedhilb.algebra.univariate import factored_to_uniterm

q, x = sympy.symbols("q x")

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero = fractions.filter(lambda v: v != 0)


@st.composite
def series(draw, prec=8, unit=False):
    coeffs = draw(st.lists(fractions, min_size=prec, max_size=prec))
    if unit:
        coeffs[0] = draw(nonzero)
    return TruncatedSeries(coeffs, 0, prec)


def coeffs_of(s, n):
    return [s.coeff(k) for k in range(n)]


def sympy_coeffs(expr, n):
    poly = sympy.expand(sympy.series(expr, q, 0, n).removeO())
    return [Fraction(str(poly.coeff(q, k))) for k in range(n)]


def to_sympy(s):
    return sum(sympy.Rational(str(c)) * q ** k for k, c in s.items())


# -- Laurent ------------------------------------------------------------------


def test_laurent_arithmetic():
    a = Laurent({-2: 1, 1: Fraction(1, 2)})
    b = Laurent.monomial(3, 2)
    assert (a * b).terms == {0: 3, 3: Fraction(3, 2)}
    assert (a - a).is_zero()
    assert (b / b) == Laurent.constant(1)
    assert (b ** -1) == Laurent.monomial(Fraction(1, 3), -2)
    assert a.evaluate(2) == Fraction(1, 4) + 1
    assert str(Laurent.monomial(3, 3)) == "3*s1^3"


# -- truncated series -----------------------------------------------------------


def test_binomial_examples():
    assert coeffs_of(hook_factor(1, -2, 3), 3) == [1, 2, 3]
    assert coeffs_of(hook_factor(1, 0, 3), 3) == [1, 0, 0]
    s = hook_factor(3, -2, 3) * hook_factor(1, -2, 3) ** 2
    assert coeffs_of(s, 3) == [1, 4, 10]


def test_sqrt_examples():
    s = TruncatedSeries([1, 2, 1], 0, 6)
    assert coeffs_of(s.sqrt(1), 6) == [1, 1, 0, 0, 0, 0]
    assert hook_factor(1, -2, 8).sqrt(1) == hook_factor(1, -1, 8)
    with pytest.raises(ValueError):
        s.sqrt(2)
    with pytest.raises(ValueError):
        TruncatedSeries([1], 1, 4).sqrt(1)


@pytest.mark.parametrize("h,power,sign", [(1, -2, 1), (3, 2, 1), (2, -3, -1), (4, -1, 1)])
def test_hook_factor_against_sympy(h, power, sign):
    assert coeffs_of(hook_factor(h, power, 10, sign), 10) == \
        sympy_coeffs((1 - sign * q ** h) ** power, 10)


def test_precision_bookkeeping():
    a = TruncatedSeries([1, 1], 0, 5)
    b = TruncatedSeries([2], 1, 4)
    assert (a + b).prec == 4
    assert (a * b).prec == 4
    assert a.shift(3).prec == 8 and a.shift(3).valuation == 3
    assert a.inverse().prec == 5
    with pytest.raises(IndexError):
        b.coeff(4)
    with pytest.raises(ValueError):
        a + TruncatedSeries([1], 0, 5, den=2)


def test_half_integer_grid():
    s = TruncatedSeries.from_dict({1: Fraction(1), 4: Fraction(2)}, 8, "Q", 2)
    assert s[Fraction(1, 2)] == 1 and s[2] == 2
    with pytest.raises(ValueError):
        s.negate_argument()
    assert s.regrid(4)[Fraction(1, 2)] == 1


@given(series(), series())
def test_ring_commutative(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(series(), series(), series())
def test_ring_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(series(unit=True))
def test_inverse_roundtrip(a):
    assert (a * a.inverse()).first_mismatch(TruncatedSeries.one(a.prec)) is None


@given(series(unit=True))
def test_square_then_sqrt(a):
    assert (a * a).sqrt(a.coeff(0)) == a


@given(series())
def test_negate_argument_involution(a):
    assert a.negate_argument().negate_argument() == a


@given(series(), series())
@settings(max_examples=15)
def test_product_against_sympy(a, b):
    want = sympy_coeffs(to_sympy(a) * to_sympy(b), 8)
    assert coeffs_of(a * b, 8) == want


@given(series(unit=True))
@settings(max_examples=15)
def test_inverse_against_sympy(a):
    want = sympy_coeffs(1 / to_sympy(a), 8)
    assert coeffs_of(a.inverse(), 8) == want


# -- factored rationals and brackets ---------------------------------------------


def test_factored_examples():
    f = FactoredRational.from_form((1, 1, 0)) / FactoredRational.from_form((1, 1, 0))
    assert f == FactoredRational(1)
    g = FactoredRational.from_form((1, 0, 0)) * FactoredRational.from_form((0, 1, 0))
    assert g.restrict_antidiagonal() == FactoredRational(-1, {(1, 0, 0): 2})
    assert FactoredRational.from_form((2, 2, 0)).evaluate((1, 2, 3)) == 6
    with pytest.raises(ZeroDivisionError):
        FactoredRational.from_form((1, 1, 0), -1).restrict_antidiagonal()
    assert FactoredRational.from_form((1, 1, 0)).restrict_antidiagonal(strict=False).is_zero()


@given(st.lists(st.tuples(st.tuples(*[st.integers(-3, 3)] * 3), st.integers(-2, 2)),
                max_size=5), nonzero, nonzero, nonzero)
def test_factored_evaluate_matches_direct(factors, a, b, c):
    f = FactoredRational(1)
    direct = Fraction(1)
    for form, e in factors:
        v = form[0] * a + form[1] * b + form[2] * c
        if not any(form) or v == 0:
            continue
        f = f * FactoredRational.from_form(form, e)
        direct *= v ** e
    assert f.evaluate((a, b, c)) == direct


@given(st.tuples(*[st.integers(-3, 3)] * 3), st.integers(-2, 2))
def test_bracket_is_odd(w, e):
    if not any(w):
        return
    neg = tuple(-v for v in w)
    assert BracketProduct.from_weight(neg, e) == BracketProduct.from_weight(w, e) * (-1) ** e


def test_bracket_evaluate():
    b = BracketProduct.from_weight((1, 0, 0)) * BracketProduct.from_weight((0, 1, 1), -1)
    r1, r2, r3 = Fraction(2), Fraction(3), Fraction(5)
    want = (r1 - 1 / r1) / (r2 * r3 - 1 / (r2 * r3))
    assert b.evaluate(r1, r2, r3) == want


# -- univariate sums --------------------------------------------------------------


def test_sum_terms_examples():
    inv = UniTerm(Fraction(1), (({1: Fraction(1)}, -1),))
    assert sum_terms_at([inv, UniTerm(Fraction(-1), inv.factors)], 0) == 0
    other = UniTerm(Fraction(1), (({1: Fraction(1), 0: Fraction(-1)}, 1), ({1: Fraction(1)}, -1)))
    assert sum_terms_at([inv, other], 0) == 1
    assert sum_terms_at([inv, other], 0, "fraction") == 1
    with pytest.raises(ZeroDivisionError):
        sum_terms_at([inv], 0)


@given(st.lists(st.tuples(nonzero, st.lists(st.tuples(fractions, nonzero, st.integers(-3, 2)),
                                             max_size=3)), min_size=1, max_size=4),
       fractions)
def test_sum_strategies_against_sympy(raw, value):
    """Both summation strategies agree with sympy whenever the sum is regular."""
    terms, expr = [], 0
    for scalar, factors in raw:
        facs, t = [], sympy.Rational(str(scalar))
        for alpha, beta, e in factors:
            facs.append(({0: alpha, 1: beta} if alpha else {1: beta}, e))
            t *= (sympy.Rational(str(alpha)) + sympy.Rational(str(beta)) * x) ** e
        terms.append(UniTerm(scalar, tuple(facs)))
        expr += t
    expr = sympy.cancel(sympy.together(expr))
    v = sympy.Rational(str(value))
    den = sympy.denom(expr)
    if den.subs(x, v) == 0:
        for strategy in ("series", "fraction"):
            with pytest.raises(ZeroDivisionError):
                sum_terms_at(terms, value, strategy)
        return
    want = Fraction(str(expr.subs(x, v)))
    assert sum_terms_at(terms, value, "series") == want
    assert sum_terms_at(terms, value, "fraction") == want


def test_factored_to_uniterm():
    f = FactoredRational.from_form((1, 0, 1), -1) * FactoredRational.from_form((0, 1, 0))
    t = factored_to_uniterm(f, 2, {0: 2, 1: 3})
    assert sum_terms_at([t], 0) == Fraction(3, 2)
    with pytest.raises(ValueError):
        factored_to_uniterm(f, 2, {0: 2})
