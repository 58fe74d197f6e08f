"""Sparse univariate Laurent polynomials with rational coefficients.

Used as the coefficient ring of series that carry a power of s1, and as
the working representation of one-variable characters.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Laurent:
    """A finite sum of ``c * x**e`` with integer ``e``.

    Division is only defined by monomials, which is all a series with a
    monomial leading coefficient ever needs.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms=None, var: str = "s1"):
        clean = {}
        for e, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                clean[int(e)] = c
        self.terms = clean
        self.var = var

    @classmethod
    def monomial(cls, coeff, exp: int, var: str = "s1") -> "Laurent":
        return cls({exp: coeff}, var)

    @classmethod
    def constant(cls, c, var: str = "s1") -> "Laurent":
        return cls({0: c}, var)

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.var != self.var and other.terms and self.terms:
                raise ValueError(f"variable mismatch {self.var} vs {other.var}")
            return other
        return Laurent({0: _as_fraction(other)}, self.var)

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def coeff(self, e: int) -> Fraction:
        return self.terms.get(e, Fraction(0))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.is_monomial():
            raise ZeroDivisionError(f"cannot divide by non-monomial {other}")
        ((e0, c0),) = other.terms.items()
        return Laurent({e - e0: c / c0 for e, c in self.terms.items()}, self.var)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return Laurent.constant(1, self.var) / (self ** (-k))
        out = Laurent.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def evaluate(self, x) -> Fraction:
        x = _as_fraction(x)
        return sum((c * x ** e for e, c in self.terms.items()), Fraction(0))

    def __repr__(self):
        return f"Laurent({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            elif e == 1:
                parts.append(f"{c}*{self.var}")
            else:
                parts.append(f"{c}*{self.var}^{e}")
        return " + ".join(parts)


def coeff_to_str(c) -> str:
    """Serialize a coefficient (rational or Laurent) as a string."""
    return str(c)
