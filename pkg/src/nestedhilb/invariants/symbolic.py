"""Fully symbolic localisation sums in (s1, s2, s3).

Terms are brought to a common denominator that is a product of linear
forms; numerators are sparse polynomials.  Cancellation is by exact trial
division against the denominator forms, which is all that is needed
because every denominator comes from an Euler class.
"""
from __future__ import annotations

from fractions import Fraction

from ..algebra.factored import FactoredRational, NVARS, form_to_str, normalize_form
from ..algebra.laurent import Laurent
from ..combinatorics import ReversedPlanePartition
from ..localization import euler_class, evee_fixed_point, fixed_points
from .modes import LocalCurveGeometry


class SparsePoly:
    """Polynomial in s1, s2, s3 as {exponent triple: Fraction}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {e: Fraction(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c):
        return cls({(0,) * NVARS: c})

    @classmethod
    def linear(cls, form):
        out = {}
        for v, c in enumerate(form):
            if c:
                e = [0] * NVARS
                e[v] = 1
                out[tuple(e)] = Fraction(c)
        return cls(out)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(out)

    def __neg__(self):
        return SparsePoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, SparsePoly):
            return SparsePoly({e: c * other for e, c in self.terms.items()})
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(out)

    def __pow__(self, k: int):
        out = SparsePoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def divide_linear(self, form):
        """Exact quotient by a linear form, or None if it does not divide."""
        v = next(i for i, c in enumerate(form) if c)
        lead = Fraction(form[v])
        # lex order with variable v first: leading term of the form is lead * x_v
        order = [v] + [i for i in range(NVARS) if i != v]

        def key(e):
            return tuple(e[i] for i in order)

        rem = dict(self.terms)
        quot: dict = {}
        while rem:
            e = max(rem, key=key)
            c = rem[e]
            if e[v] == 0:
                return None
            qe = list(e)
            qe[v] -= 1
            qe = tuple(qe)
            qc = c / lead
            quot[qe] = quot.get(qe, 0) + qc
            for i, fc in enumerate(form):
                if not fc:
                    continue
                te = list(qe)
                te[i] += 1
                te = tuple(te)
                nv = rem.get(te, 0) - qc * fc
                if nv:
                    rem[te] = nv
                else:
                    rem.pop(te, None)
        return SparsePoly(quot)

    def substitute(self, matrix) -> "SparsePoly":
        """Linear substitution: variable i becomes the linear form matrix[i]."""
        images = [SparsePoly.linear(row) for row in matrix]
        out = SparsePoly()
        for e, c in self.terms.items():
            term = SparsePoly.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * images[i] ** k
            out = out + term
        return out

    def __repr__(self):
        return f"SparsePoly({self.terms})"


class FactoredFraction:
    """numerator / prod(form ** exp) with a sparse numerator and positive exponents."""

    def __init__(self, num: SparsePoly, den: dict):
        self.num = num
        self.den = {f: e for f, e in den.items() if e}

    def reduce(self) -> "FactoredFraction":
        num, den = self.num, dict(self.den)
        if num.is_zero():
            return FactoredFraction(num, {})
        for form in sorted(den):
            while den[form]:
                q = num.divide_linear(form)
                if q is None:
                    break
                num = q
                den[form] -= 1
        return FactoredFraction(num, den)

    def substitute(self, matrix) -> "FactoredFraction":
        """Substitute in numerator and denominator; vanishing forms must have exponent 0."""
        num = self.num.substitute(matrix)
        den: dict = {}
        for form, e in self.den.items():
            image = [sum(form[r] * matrix[r][c] for r in range(NVARS)) for c in range(NVARS)]
            if not any(image):
                raise ZeroDivisionError(f"pole along {form_to_str(form)}")
            g, prim = normalize_form(image)
            num = num * (Fraction(1) / Fraction(g) ** e)
            den[prim] = den.get(prim, 0) + e
        return FactoredFraction(num, den)

    def __str__(self):
        den = "*".join(f"({form_to_str(f)})^{e}" for f, e in sorted(self.den.items()))
        return f"[{len(self.num.terms)} terms] / {den or 1}"


def sum_factored(terms: list[FactoredRational]) -> FactoredFraction:
    """Exact sum of FactoredRationals over a common denominator, reduced."""
    den: dict = {}
    for t in terms:
        for f, e in t.factors.items():
            if e < 0:
                den[f] = max(den.get(f, 0), -e)
    total = SparsePoly()
    for t in terms:
        if t.is_zero():
            continue
        num = SparsePoly.constant(t.scalar)
        for f, e in t.factors.items():
            if e > 0:
                num = num * SparsePoly.linear(f) ** e
        for f, e in den.items():
            k = e + min(t.factors.get(f, 0), 0)
            if k:
                num = num * SparsePoly.linear(f) ** k
        total = total + num
    return FactoredFraction(total, den).reduce()


S3_ZERO = ((1, 0, 0), (0, 1, 0), (0, 0, 0))
ANTIDIAGONAL = ((1, 0, 0), (-1, 0, 0), (0, 0, 1))


def symbolic_integral(n_lam: ReversedPlanePartition, geom: LocalCurveGeometry, lifts=None):
    """The localisation sum kept symbolic in s1, s2, s3.

    Returns (value as a function of s1 and s2, its antidiagonal restriction
    as a Laurent polynomial in s1).
    """
    if geom.g != 0:
        raise ValueError("localisation is only available on P^1 (g = 0)")
    terms = [euler_class(-evee_fixed_point(n_lam, fp, geom.k1, geom.k2, lifts))
             for fp in fixed_points(n_lam)]
    total = sum_factored(terms)
    at_zero = total.substitute(S3_ZERO).reduce()
    restricted = at_zero.substitute(ANTIDIAGONAL)
    out: dict = {}
    for e, c in restricted.num.terms.items():
        out[e[0]] = out.get(e[0], 0) + c
    deg_den = sum(restricted.den.values())
    for form in restricted.den:
        if form != (1, 0, 0):
            raise ArithmeticError(f"unexpected denominator {form_to_str(form)}")
    return at_zero, Laurent({e - deg_den: c for e, c in out.items()})


__all__ = ["FactoredFraction", "SparsePoly", "sum_factored", "symbolic_integral"]
