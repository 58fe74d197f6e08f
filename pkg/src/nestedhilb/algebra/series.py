"""Truncated formal Laurent series in one variable.

Exponents live on the grid ``(1/den) * Z``; internally every exponent is
stored as an integer number of grid steps.  A series knows its
coefficients exactly for all grid exponents strictly below ``prec``.
Coefficients may be any exact field element supporting ``+ - * /`` with
integers (``Fraction`` or ``Laurent``).
"""
from __future__ import annotations

from fractions import Fraction


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    __slots__ = ("var", "den", "lo", "coeffs", "prec")

    def __init__(self, coeffs, lo: int = 0, prec: int | None = None,
                 var: str = "q", den: int = 1):
        coeffs = list(coeffs)
        if prec is None:
            prec = lo + len(coeffs)
        if len(coeffs) > prec - lo:
            coeffs = coeffs[: max(prec - lo, 0)]
        start = 0
        while start < len(coeffs) and _is_zero(coeffs[start]):
            start += 1
        coeffs = coeffs[start:]
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.var = var
        self.den = den
        self.lo = lo + start if coeffs else prec
        self.coeffs = coeffs
        self.prec = prec

    # -- construction -------------------------------------------------------
    @classmethod
    def from_dict(cls, terms: dict, prec: int, var: str = "q", den: int = 1):
        """Build from ``{grid_exponent: coeff}``; exponents >= prec are dropped."""
        keep = {e: c for e, c in terms.items() if e < prec and not _is_zero(c)}
        if not keep:
            return cls([], prec, prec, var, den)
        lo = min(keep)
        coeffs = [keep.get(e, 0) for e in range(lo, prec)]
        return cls(coeffs, lo, prec, var, den)

    @classmethod
    def constant(cls, c, prec: int, var: str = "q", den: int = 1):
        return cls.from_dict({0: c}, prec, var, den)

    @classmethod
    def one(cls, prec: int, var: str = "q", den: int = 1):
        return cls.constant(Fraction(1), prec, var, den)

    def _like(self, coeffs, lo, prec):
        return TruncatedSeries(coeffs, lo, prec, self.var, self.den)

    # -- access ---------------------------------------------------------------
    @property
    def valuation(self) -> int:
        """Lowest grid exponent with a nonzero coefficient (prec if none known)."""
        return self.lo

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int):
        """Coefficient at grid exponent ``k``."""
        if k >= self.prec:
            raise IndexError(f"exponent {k} beyond precision {self.prec}")
        i = k - self.lo
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __getitem__(self, exponent):
        k = Fraction(exponent) * self.den
        if k.denominator != 1:
            raise KeyError(f"{exponent} is off the exponent grid 1/{self.den}")
        return self.coeff(int(k))

    def items(self):
        """(grid_exponent, coeff) for nonzero coefficients."""
        return [(self.lo + i, c) for i, c in enumerate(self.coeffs) if not _is_zero(c)]

    def _check(self, other: "TruncatedSeries"):
        if self.den != other.den:
            raise ValueError(f"grid mismatch 1/{self.den} vs 1/{other.den}")

    # -- ring operations ------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self + TruncatedSeries.constant(other, self.prec, self.var, self.den)
        self._check(other)
        prec = min(self.prec, other.prec)
        lo = min(self.lo, other.lo)
        out = [0] * max(prec - lo, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.lo + i - lo
                if k < len(out):
                    out[k] = out[k] + c
        return self._like(out, lo, prec)

    __radd__ = __add__

    def __neg__(self):
        return self._like([-c for c in self.coeffs], self.lo, self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        return self._like([c * x for x in self.coeffs], self.lo, self.prec)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            return self.scale(other)
        self._check(other)
        prec = min(self.prec + other.lo, other.prec + self.lo)
        lo = self.lo + other.lo
        n = max(prec - lo, 0)
        out = [0] * n
        a, b = self.coeffs, other.coeffs
        for i, x in enumerate(a[:n]):
            if _is_zero(x):
                continue
            for j in range(min(len(b), n - i)):
                y = b[j]
                if not _is_zero(y):
                    out[i + j] = out[i + j] + x * y
        return self._like(out, lo, prec)

    __rmul__ = __mul__

    def inverse(self):
        if not self.coeffs:
            raise ZeroDivisionError("series has no invertible leading term")
        v = self.lo
        rel = self.prec - v
        a = self.coeffs
        inv0 = 1 / a[0] if not isinstance(a[0], int) else Fraction(1, a[0])
        out = [inv0]
        for n in range(1, rel):
            acc = 0
            for k in range(1, min(n, len(a) - 1) + 1):
                acc = acc + a[k] * out[n - k]
            out.append(-acc * inv0)
        return self._like(out, -v, -v + rel)

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        return self.scale(1 / other if not isinstance(other, int) else Fraction(1, other))

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return TruncatedSeries.one(self.prec - self.lo, self.var, self.den)
        result = None
        base = self
        while k:
            if k & 1:
                result = base if result is None else result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def sqrt(self, leading_root):
        """Square root whose leading coefficient is ``leading_root``."""
        if not self.coeffs:
            raise ValueError("square root of a series with no known nonzero term")
        v = self.lo
        if v % 2:
            raise ValueError("odd valuation has no square root on this grid")
        a = self.coeffs
        if leading_root * leading_root != a[0]:
            raise ValueError(f"leading coefficient {a[0]} is not ({leading_root})^2")
        rel = self.prec - v
        two_r = 2 * leading_root
        out = [leading_root]
        for n in range(1, rel):
            acc = a[n] if n < len(a) else 0
            for k in range(1, n):
                acc = acc - out[k] * out[n - k]
            out.append(acc / two_r)
        return self._like(out, v // 2, v // 2 + rel)

    # -- reshaping ------------------------------------------------------------
    def shift(self, k: int):
        """Multiply by var^(k / den)."""
        return self._like(self.coeffs, self.lo + k, self.prec + k)

    def truncate(self, prec: int):
        prec = min(prec, self.prec)
        return self._like(self.coeffs, self.lo, prec)

    def negate_argument(self):
        """Substitute var -> -var.  Only defined on the integer grid."""
        if self.den != 1:
            odd = [k for k, _ in self.items() if k % self.den]
            if odd:
                raise ValueError("var -> -var is undefined on half-integer exponents")
            out = {k: (c if (k // self.den) % 2 == 0 else -c) for k, c in self.items()}
            return TruncatedSeries.from_dict(out, self.prec, self.var, self.den)
        return self._like([c if (self.lo + i) % 2 == 0 else -c
                           for i, c in enumerate(self.coeffs)], self.lo, self.prec)

    def map_coeffs(self, f):
        return self._like([f(c) for c in self.coeffs], self.lo, self.prec)

    def regrid(self, den: int):
        """Same series viewed on a finer grid (den must be a multiple)."""
        if den % self.den:
            raise ValueError("new grid must refine the old one")
        m = den // self.den
        terms = {k * m: c for k, c in self.items()}
        return TruncatedSeries.from_dict(terms, self.prec * m, self.var, den)

    def substitute_power(self, m: int):
        """var -> var^m for a positive integer m."""
        terms = {k * m: c for k, c in self.items()}
        return TruncatedSeries.from_dict(terms, self.prec * m, self.var, self.den)

    # -- comparison -----------------------------------------------------------
    def first_mismatch(self, other, upto: int | None = None):
        """First grid exponent where the two series differ, or None."""
        self._check(other)
        top = min(self.prec, other.prec)
        if upto is not None:
            top = min(top, upto)
        lo = min(self.lo, other.lo)
        for k in range(lo, top):
            if self.coeff(k) != other.coeff(k):
                return k
        return None

    def agrees(self, other, upto: int | None = None) -> bool:
        return self.first_mismatch(other, upto) is None

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.den == other.den and self.prec == other.prec
                and self.lo == other.lo and self.coeffs == other.coeffs)

    __hash__ = None

    # -- output ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "var": self.var,
            "min_exp": str(Fraction(self.lo, self.den)),
            "denominator_of_grid": self.den,
            "precision": str(Fraction(self.prec, self.den)),
            "coeffs": [str(c) for c in self.coeffs],
        }

    def __repr__(self):
        return f"TruncatedSeries({self})"

    def __str__(self):
        parts = []
        for k, c in self.items():
            e = Fraction(k, self.den)
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if e == 0:
                parts.append(cs)
            else:
                mono = self.var if e == 1 else f"{self.var}^{e}"
                parts.append(mono if cs == "1" else f"{cs}*{mono}")
        parts.append(f"O({self.var}^{Fraction(self.prec, self.den)})")
        return " + ".join(parts)


def hook_factor(h: int, power: int, prec: int, sign: int = 1, var: str = "q"):
    """(1 - sign*q^h)^power, truncated below q^prec."""
    base = TruncatedSeries.from_dict({0: Fraction(1), h: Fraction(-sign)}, prec, var)
    return base ** power
