"""Products of K-theoretic brackets [t^mu] = t^(mu/2) - t^(-mu/2).

Weights are integer vectors over (t1, t2, t3).  Since [t^-mu] = -[t^mu],
each weight is stored with its first nonzero entry positive and the sign
goes into the scalar.
"""
from __future__ import annotations

from fractions import Fraction

from .univariate import UniTerm


def normalize_weight(mu) -> tuple[int, tuple[int, ...]]:
    mu = tuple(int(x) for x in mu)
    lead = next((x for x in mu if x), 0)
    if lead == 0:
        raise ZeroDivisionError("bracket of the trivial character is zero")
    return (1, mu) if lead > 0 else (-1, tuple(-x for x in mu))


class BracketProduct:
    __slots__ = ("scalar", "factors")

    def __init__(self, scalar=1, factors=None):
        self.scalar = Fraction(scalar)
        clean = {}
        if self.scalar:
            for w, e in (factors or {}).items():
                if e:
                    clean[w] = clean.get(w, 0) + e
            clean = {w: e for w, e in clean.items() if e}
        self.factors = clean

    @classmethod
    def zero(cls):
        return cls(0)

    @classmethod
    def from_weight(cls, mu, exp: int = 1):
        sign, w = normalize_weight(mu)
        return cls(Fraction(sign) ** exp, {w: exp})

    def is_zero(self) -> bool:
        return self.scalar == 0

    def __mul__(self, other):
        if not isinstance(other, BracketProduct):
            return BracketProduct(self.scalar * Fraction(other), self.factors)
        if self.is_zero() or other.is_zero():
            return BracketProduct.zero()
        merged = dict(self.factors)
        for w, e in other.factors.items():
            merged[w] = merged.get(w, 0) + e
        return BracketProduct(self.scalar * other.scalar, merged)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return BracketProduct(1 / self.scalar, {w: -e for w, e in self.factors.items()})

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return BracketProduct(self.scalar ** k, {w: e * k for w, e in self.factors.items()})

    def __neg__(self):
        return BracketProduct(-self.scalar, self.factors)

    def __eq__(self, other):
        if not isinstance(other, BracketProduct):
            return NotImplemented
        return self.scalar == other.scalar and self.factors == other.factors

    def __hash__(self):
        return hash((self.scalar, tuple(sorted(self.factors.items()))))

    def restrict_antidiagonal(self, strict: bool = True) -> "BracketProduct":
        """Impose t1*t2 = 1, i.e. send (m1, m2, m3) to (m1 - m2, 0, m3)."""
        scalar = self.scalar
        merged: dict = {}
        vanishing = 0
        for w, e in self.factors.items():
            image = (w[0] - w[1], 0, w[2])
            if not any(image):
                vanishing += e
                continue
            sign, nw = normalize_weight(image)
            scalar *= Fraction(sign) ** e
            merged[nw] = merged.get(nw, 0) + e
        if vanishing < 0 or (vanishing > 0 and strict):
            raise ZeroDivisionError("uncancelled bracket vanishing at t1*t2 = 1")
        if vanishing > 0:
            return BracketProduct.zero()
        return BracketProduct(scalar, merged)

    def to_uniterm(self, root1: Fraction, root2: Fraction) -> UniTerm:
        """Specialise t1^(1/2) = root1, t2^(1/2) = root2; keep u = t3^(1/2)."""
        factors = []
        for w, e in self.factors.items():
            a = Fraction(root1) ** w[0] * Fraction(root2) ** w[1]
            if w[2] == 0:
                c = a - 1 / a
                if c == 0:
                    raise ZeroDivisionError(f"bracket of {w} vanishes at this point")
                factors.append(({0: c}, e))
            else:
                factors.append(({w[2]: a, -w[2]: -1 / a}, e))
        return UniTerm(self.scalar, tuple(factors))

    def evaluate(self, root1, root2, root3) -> Fraction:
        out = self.scalar
        for w, e in self.factors.items():
            a = Fraction(root1) ** w[0] * Fraction(root2) ** w[1] * Fraction(root3) ** w[2]
            v = a - 1 / a
            if v == 0:
                if e < 0:
                    raise ZeroDivisionError("pole")
                return Fraction(0)
            out *= v ** e
        return out

    def __repr__(self):
        inner = "*".join(f"[{w}]^{e}" for w, e in sorted(self.factors.items()))
        return f"BracketProduct({self.scalar}{'*' + inner if inner else ''})"
