"""Summation of products of univariate Laurent factors, then specialisation.

A localisation sum is a list of terms ``scalar * prod(P_k(x) ** e_k)``
where every ``P_k`` is a Laurent polynomial in one auxiliary variable x
(s3, or u = t3^(1/2)).  Individual terms have poles at the evaluation
point; the sum does not.  Two independent strategies compute the value:

* ``"series"`` expands every term as a Laurent series in eps = x - value
  and reads off the eps^0 coefficient of the sum.
* ``"fraction"`` adds the terms exactly as reduced polynomial fractions
  and evaluates the result.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import TruncatedSeries

# ---------------------------------------------------------------------------
# dense polynomials: lists of Fractions, lowest degree first


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                  for i in range(n)])


def poly_pow(a, k: int):
    out = [Fraction(1)]
    for _ in range(k):
        out = poly_mul(out, a)
    return out


def poly_divmod(a, b):
    a = _trim(a)
    b = _trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b) and r:
        shift = len(r) - len(b)
        c = r[-1] / lead
        q[shift] = c
        for i, y in enumerate(b):
            r[shift + i] -= c * y
        r = _trim(r)
    return _trim(q), r


def poly_gcd(a, b):
    a, b = _trim(a), _trim(b)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [c / lead for c in a]


def poly_eval(p, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_taylor(p, a):
    """Coefficients of p(a + eps) as a polynomial in eps."""
    out = list(p)
    n = len(out)
    # repeated synthetic division
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += a * out[j + 1]
    return _trim(out)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniTerm:
    """``scalar * prod(factor ** exp)``; factors map exponent -> coefficient."""
    scalar: Fraction
    factors: tuple  # of (dict[int, Fraction], int)


def _split_laurent(p: dict):
    """Write a Laurent polynomial as x^m * R(x) with R a polynomial."""
    if not p:
        raise ZeroDivisionError("identically zero factor")
    m = min(p)
    top = max(p)
    return m, [Fraction(p.get(m + i, 0)) for i in range(top - m + 1)]


class UnivariatePolyFraction:
    """num(x) / den(x) * x^shift, kept reduced (den monic, coprime to num and x)."""

    __slots__ = ("num", "den", "shift")

    def __init__(self, num, den=None, shift: int = 0):
        num = _trim([Fraction(c) for c in num])
        den = _trim([Fraction(c) for c in (den if den is not None else [1])])
        if not den:
            raise ZeroDivisionError("zero denominator")
        # pull powers of x out of both
        while num and num[0] == 0:
            num.pop(0)
            shift += 1
        while den[0] == 0:
            den.pop(0)
            shift -= 1
        if num:
            g = poly_gcd(num, den)
            if len(g) > 1:
                num, _ = poly_divmod(num, g)
                den, _ = poly_divmod(den, g)
        lead = den[-1]
        self.num = [c / lead for c in num]
        self.den = [c / lead for c in den]
        self.shift = shift if num else 0

    @classmethod
    def from_term(cls, term: UniTerm):
        num, den, shift = [term.scalar], [Fraction(1)], 0
        for p, e in term.factors:
            m, r = _split_laurent(p)
            shift += m * e
            if e > 0:
                num = poly_mul(num, poly_pow(r, e))
            elif e < 0:
                den = poly_mul(den, poly_pow(r, -e))
        return cls(num, den, shift)

    def is_zero(self) -> bool:
        return not self.num

    def __add__(self, other: "UnivariatePolyFraction"):
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        s = min(self.shift, other.shift)
        a = [Fraction(0)] * (self.shift - s) + self.num
        c = [Fraction(0)] * (other.shift - s) + other.num
        g = poly_gcd(self.den, other.den)
        bd, _ = poly_divmod(self.den, g)
        dd, _ = poly_divmod(other.den, g)
        num = poly_add(poly_mul(a, dd), poly_mul(c, bd))
        den = poly_mul(bd, other.den)
        return UnivariatePolyFraction(num, den, s)

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        if self.is_zero():
            return Fraction(0)
        d = poly_eval(self.den, x)
        if d == 0 or (x == 0 and self.shift < 0):
            raise ZeroDivisionError(f"pole at {x} after reduction")
        return poly_eval(self.num, x) * x ** self.shift / d


def _binomial_series(ratio: Fraction, e: int, prec: int) -> list:
    """Coefficients of (1 + ratio*eps)^e below eps^prec."""
    out = [Fraction(1)]
    c = Fraction(1)
    for k in range(1, prec):
        c = c * (e - k + 1) / k * ratio
        out.append(c)
    return out


def _term_expansion(term: UniTerm, value: Fraction, prec: int):
    """Laurent expansion of a term in eps = x - value, known below eps^prec.

    Returns None when the term's valuation already reaches prec.
    """
    val = 0
    lead = term.scalar
    units = []  # (unit polynomial in eps with constant term 1, exponent)
    for p, e in term.factors:
        m, r = _split_laurent(p)
        if m:
            if value == 0:
                val += m * e
            else:
                lead *= value ** (m * e)
                units.append(([Fraction(1), 1 / value], m * e))
        t = poly_taylor(r, value)
        v = 0
        while t[v] == 0:
            v += 1
        t = t[v:]
        val += v * e
        c0 = t[0]
        lead *= c0 ** e
        units.append(([Fraction(1)] + [c / c0 for c in t[1:]], e))
    rel = prec - val
    if rel <= 0:
        return None
    acc = TruncatedSeries([Fraction(1)], 0, rel, "eps")
    for u, e in units:
        if len(u) == 1 or e == 0:
            continue
        if len(u) == 2:
            s = TruncatedSeries(_binomial_series(u[1], e, rel), 0, rel, "eps")
        else:
            s = TruncatedSeries(u, 0, rel, "eps") ** e
        acc = acc * s
    return acc.scale(lead).shift(val)


def sum_terms_at(terms, value=0, strategy: str = "series") -> Fraction:
    """Exact value at ``value`` of the sum of UniTerms."""
    value = Fraction(value)
    terms = [t for t in terms if t.scalar != 0]
    if not terms:
        return Fraction(0)
    if strategy == "fraction":
        total = UnivariatePolyFraction([])
        for t in terms:
            total = total + UnivariatePolyFraction.from_term(t)
        return total.evaluate(value)
    if strategy != "series":
        raise ValueError(f"unknown strategy {strategy!r}")
    total = None
    for t in terms:
        s = _term_expansion(t, value, 1)
        if s is None:
            continue
        total = s if total is None else total + s
    if total is None:
        return Fraction(0)
    for k, c in total.items():
        if k < 0 and c != 0:
            raise ZeroDivisionError(f"sum has a pole of order {-k} at {value}")
    return Fraction(total.coeff(0))


def factored_to_uniterm(f, var: int = 2, point=None) -> UniTerm:
    """View a FactoredRational as a UniTerm in variable ``var``.

    ``point`` assigns exact values to the other variables (missing entries
    must have zero coefficient in every form).
    """
    point = point or {}
    factors = []
    for form, e in f.factors.items():
        alpha = Fraction(0)
        for i, c in enumerate(form):
            if i == var or not c:
                continue
            if i not in point:
                raise ValueError(f"variable s{i + 1} left unspecialised")
            alpha += c * Fraction(point[i])
        beta = form[var]
        p = {}
        if alpha:
            p[0] = alpha
        if beta:
            p[1] = Fraction(beta)
        if not p:
            raise ZeroDivisionError("form vanishes at the specialisation point")
        factors.append((p, e))
    return UniTerm(f.scalar, tuple(factors))


def sum_and_specialize(terms, var: int = 2, value=0, point=None,
                       strategy: str = "series") -> Fraction:
    """Sum FactoredRationals as functions of one variable and evaluate.

    The remaining variables are fixed by ``point``.
    """
    return sum_terms_at([factored_to_uniterm(t, var, point) for t in terms],
                        value, strategy)
