"""The universal series A, B, C: closed forms and extraction from localisation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.series import TruncatedSeries
from ..combinatorics import Partition, hook_product_series, n_stat
from .integrals import hook_product, leading_term_euler, pt_local_series
from .modes import ANTIDIAGONAL, FULL, KTHEORY, LocalCurveGeometry, Mode, SYMBOLIC

# the three P^1 geometries whose series determine A, B, C
BASIS = (LocalCurveGeometry(0, 0, 0), LocalCurveGeometry(0, -1, -1), LocalCurveGeometry(0, 0, -2))


@dataclass
class UniversalSeriesTriple:
    """A, B, C stored at argument q, known below q^prec."""
    lam: Partition
    mode: Mode
    A: TruncatedSeries
    B: TruncatedSeries
    C: TruncatedSeries

    def __post_init__(self):
        for name in ("A", "B", "C"):
            s = getattr(self, name)
            if s.valuation != 0:
                raise ValueError(f"{name} must start with a nonzero constant term")

    @property
    def prec(self) -> int:
        return min(self.A.prec, self.B.prec, self.C.prec)

    def local_series(self, geom: LocalCurveGeometry) -> TruncatedSeries:
        """A^(g-1) B^k1 C^k2."""
        return self.A ** (geom.g - 1) * self.B ** geom.k1 * self.C ** geom.k2

    def first_mismatch(self, other: "UniversalSeriesTriple", upto: int | None = None):
        for name in ("A", "B", "C"):
            k = getattr(self, name).first_mismatch(getattr(other, name), upto)
            if k is not None:
                return name, k
        return None

    def to_json(self) -> dict:
        return {"lambda": list(self.lam.parts), "mode": self.mode.to_json(),
                "A": self.A.to_json(), "B": self.B.to_json(), "C": self.C.to_json()}


def f_lambda(lam: Partition, r) -> Fraction:
    """prod over nu of [|nu1 - nu2|] / prod over mu of [|mu1 - mu2|], diagonal weights skipped.

    [m] = t1^(m/2) - t1^(-m/2) with t1^(1/2) = r.
    """
    r = Fraction(r)

    def br(m):
        return r ** m - r ** (-m)

    boxes = lam.boxes()
    out = Fraction(1)
    for i, j in boxes:
        if i != j:
            out /= br(abs(j - i))
    for i, j in boxes:
        for l, k in boxes:
            m = i - j + k - l
            if m:
                out *= br(abs(m))
            m = 1 + i - j + k - l
            if m:
                out /= br(abs(m))
    return out


def _constant(c, prec):
    return TruncatedSeries.constant(c, prec)


def universal_series_closed(lam: Partition, N: int, mode: Mode = SYMBOLIC) -> UniversalSeriesTriple:
    """Closed forms mod q^(N+1).

    antidiagonal: A = (-s1^2)^|l| prod h^2,
                  B(-q) = (-1)^n(l) s1^-|l| prod h^-1 prod (1 - q^h),
                  C(-q) = (-1)^n(lbar) (-s1)^-|l| prod h^-1 prod (1 - q^h).
    ktheory:      A = (-1)^|l| F^-2, B(-q) = (-1)^n(l) F prod (1 - q^h),
                  C(-q) = (-1)^(|l| + n(lbar)) F prod (1 - q^h).
    full (l = (1) only): A = s1 s2, B = (1 + q)/s1, C = (1 + q)/s2.
    """
    prec = N + 1
    d, n, nbar = lam.size, n_stat(lam), n_stat(lam.conjugate())
    if d == 0:
        raise ValueError("the empty diagram has no universal series")
    hooks = hook_product_series(lam, 1, prec)
    H = hook_product(lam)
    if mode.kind == ANTIDIAGONAL:
        A = _constant(mode.s1_power((-1) ** d * Fraction(H) ** 2, 2 * d), prec)
        B = hooks.scale(mode.s1_power((-1) ** n / Fraction(H), -d)).negate_argument()
        C = hooks.scale(mode.s1_power((-1) ** (nbar + d) / Fraction(H), -d)).negate_argument()
    elif mode.kind == KTHEORY:
        F = f_lambda(lam, mode.r)
        A = _constant((-1) ** d / F ** 2, prec)
        B = hooks.scale((-1) ** n * F).negate_argument()
        C = hooks.scale((-1) ** (d + nbar) * F).negate_argument()
    elif mode.kind == FULL:
        if lam != Partition((1,)):
            raise ValueError("full equivariant closed forms are only known for a single box")
        one_plus_q = TruncatedSeries.from_dict({0: Fraction(1), 1: Fraction(1)}, prec)
        A = _constant(mode.s1 * mode.s2, prec)
        B = one_plus_q.scale(1 / mode.s1)
        C = one_plus_q.scale(1 / mode.s2)
    else:
        raise ValueError(f"unsupported mode {mode.kind}")
    return UniversalSeriesTriple(lam, mode, A, B, C)


def extract_from_local(lam: Partition, Z1, Z2, Z3, c_hint, mode: Mode) -> UniversalSeriesTriple:
    """Solve Z1 = A^-1, Z2 = (ABC)^-1, Z3 = A^-1 C^-2 for A, B, C.

    The square root for C is fixed by its leading coefficient ``c_hint``.
    """
    A = Z1.inverse()
    C = (Z1 / Z3).sqrt(c_hint)
    B = (Z1 / Z2) / C
    return UniversalSeriesTriple(lam, mode, A, B, C)


def sqrt_hint(lam: Partition, mode: Mode):
    """Leading coefficient of C: the size-zero term at g = 1, (k1, k2) = (0, -1) is C0^-1."""
    return 1 / leading_term_euler(lam, LocalCurveGeometry(1, 0, -1), mode)


def basis_series(lam: Partition, N: int, mode: Mode = SYMBOLIC):
    return tuple(pt_local_series(lam, geom, N, mode) for geom in BASIS)


def universal_series_extract(lam: Partition, N: int, mode: Mode = SYMBOLIC) -> UniversalSeriesTriple:
    """A, B, C mod q^(N+1) from the localisation series of the three basis geometries."""
    if mode.kind == FULL and lam.size != 1:
        # allowed, but nothing to compare against
        pass
    Z1, Z2, Z3 = basis_series(lam, N, mode)
    return extract_from_local(lam, Z1, Z2, Z3, sqrt_hint(lam, mode), mode)


__all__ = [
    "BASIS", "UniversalSeriesTriple", "basis_series", "extract_from_local", "f_lambda",
    "sqrt_hint", "universal_series_closed", "universal_series_extract",
]
