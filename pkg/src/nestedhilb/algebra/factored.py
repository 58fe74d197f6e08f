"""Products of powers of linear forms in the equivariant parameters.

A ``FactoredRational`` is ``scalar * prod(form ** exp)`` where each form
is a primitive integer vector over the variables (s1, s2, s3).  Forms are
normalised (gcd 1, first nonzero coefficient positive), so proportional
factors always merge and the extracted constants land in the scalar.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

NVARS = 3
VARNAMES = ("s1", "s2", "s3")


def normalize_form(coeffs) -> tuple[int, tuple[int, ...]]:
    """Split an integer vector into (content, primitive form)."""
    coeffs = tuple(int(c) for c in coeffs)
    g = 0
    for c in coeffs:
        g = gcd(g, c)
    if g == 0:
        raise ZeroDivisionError("the zero linear form has no normalisation")
    lead = next(c for c in coeffs if c)
    if lead < 0:
        g = -g
    return g, tuple(c // g for c in coeffs)


def form_to_str(form) -> str:
    parts = []
    for c, v in zip(form, VARNAMES):
        if not c:
            continue
        mono = v if abs(c) == 1 else f"{abs(c)}*{v}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, mono))
    s = "".join(f"{sg}{m}" for sg, m in parts)
    return s[1:] if s.startswith("+") else s


class FactoredRational:
    __slots__ = ("scalar", "factors")

    def __init__(self, scalar=1, factors=None):
        self.scalar = Fraction(scalar)
        clean = {}
        if self.scalar:
            for form, e in (factors or {}).items():
                if e:
                    clean[form] = clean.get(form, 0) + e
            clean = {f: e for f, e in clean.items() if e}
        self.factors = clean

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def from_form(cls, coeffs, exp: int = 1):
        """(c1*s1 + c2*s2 + c3*s3) ** exp."""
        g, form = normalize_form(coeffs)
        return cls(Fraction(g) ** exp, {form: exp})

    def is_zero(self) -> bool:
        return self.scalar == 0

    def degree(self) -> int:
        """Total degree; each term is homogeneous."""
        return sum(self.factors.values())

    def __mul__(self, other):
        if not isinstance(other, FactoredRational):
            return FactoredRational(self.scalar * Fraction(other), self.factors)
        if self.is_zero() or other.is_zero():
            return FactoredRational.zero()
        merged = dict(self.factors)
        for f, e in other.factors.items():
            merged[f] = merged.get(f, 0) + e
        return FactoredRational(self.scalar * other.scalar, merged)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return FactoredRational(1 / self.scalar, {f: -e for f, e in self.factors.items()})

    def __truediv__(self, other):
        if not isinstance(other, FactoredRational):
            return FactoredRational(self.scalar / Fraction(other), self.factors)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return FactoredRational(1)
        return FactoredRational(self.scalar ** k, {f: e * k for f, e in self.factors.items()})

    def __neg__(self):
        return FactoredRational(-self.scalar, self.factors)

    def __eq__(self, other):
        if not isinstance(other, FactoredRational):
            other = FactoredRational(other)
        return self.scalar == other.scalar and self.factors == other.factors

    def __hash__(self):
        return hash((self.scalar, tuple(sorted(self.factors.items()))))

    def evaluate(self, values) -> Fraction:
        """Exact value at a point (s1, s2, s3); raises on a vanishing denominator."""
        out = self.scalar
        for form, e in self.factors.items():
            v = sum((Fraction(c) * Fraction(x) for c, x in zip(form, values)), Fraction(0))
            if v == 0:
                if e < 0:
                    raise ZeroDivisionError(f"pole along {form_to_str(form)}")
                return Fraction(0)
            out *= v ** e
        return out

    def substitute(self, matrix, strict: bool = True) -> "FactoredRational":
        """Linear change of variables: new form = form @ matrix.

        ``matrix[i]`` is the image of variable i as an integer vector.
        Factors sent to zero must cancel.  With ``strict=False`` a net
        positive exponent is allowed and gives zero; a pole always raises.
        """
        scalar = self.scalar
        merged: dict[tuple, int] = {}
        vanishing = 0
        for form, e in self.factors.items():
            image = [0] * NVARS
            for c, row in zip(form, matrix):
                for k in range(NVARS):
                    image[k] += c * row[k]
            if not any(image):
                vanishing += e
                continue
            g, prim = normalize_form(image)
            scalar *= Fraction(g) ** e
            merged[prim] = merged.get(prim, 0) + e
        if vanishing < 0 or (vanishing > 0 and strict):
            raise ZeroDivisionError("uncancelled factor vanishing under substitution")
        if vanishing > 0:
            return FactoredRational.zero()
        return FactoredRational(scalar, merged)

    def restrict_antidiagonal(self, strict: bool = True) -> "FactoredRational":
        """Substitute s2 = -s1."""
        return self.substitute(((1, 0, 0), (-1, 0, 0), (0, 0, 1)), strict)

    def __repr__(self):
        return f"FactoredRational({self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        num = [f"({form_to_str(f)})" + (f"^{e}" if e != 1 else "")
               for f, e in sorted(self.factors.items()) if e > 0]
        den = [f"({form_to_str(f)})" + (f"^{-e}" if e != -1 else "")
               for f, e in sorted(self.factors.items()) if e < 0]
        s = str(self.scalar)
        if num:
            s += "*" + "*".join(num)
        if den:
            s += "/(" + "*".join(den) + ")"
        return s


def restrict_antidiagonal(f: FactoredRational, strict: bool = True) -> FactoredRational:
    return f.restrict_antidiagonal(strict)
