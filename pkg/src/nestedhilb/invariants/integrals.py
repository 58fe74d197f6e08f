"""Localisation sums over the C*-fixed points of double nested Hilbert schemes of P^1."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.laurent import Laurent
from ..algebra.series import TruncatedSeries
from ..algebra.univariate import UniTerm, factored_to_uniterm, sum_terms_at
from ..combinatorics import (Partition, ReversedPlanePartition, enumerate_rpps,
                             hook_product_series, n_stat)
from ..localization import (FixedPoint, euler_class, evee_fixed_point, fixed_points,
                            khat_bracket, nvir_size0)
from .modes import ANTIDIAGONAL, KTHEORY, LocalCurveGeometry, Mode, SYMBOLIC


def _require_p1(geom: LocalCurveGeometry):
    if geom.g != 0:
        raise ValueError("localisation is only available on P^1 (g = 0)")


def fixed_point_term(n_lam: ReversedPlanePartition, fp: FixedPoint,
                     geom: LocalCurveGeometry, mode: Mode, lifts=None):
    """One fixed point as a UniTerm in s3 (or u = t3^(1/2)), plus its s1 degree.

    Returns (None, degree) when the contribution vanishes identically
    under the antidiagonal restriction.
    """
    V = evee_fixed_point(n_lam, fp, geom.k1, geom.k2, lifts)
    degree = -V.rank
    if mode.kind == KTHEORY:
        b = khat_bracket(-V).restrict_antidiagonal(strict=False)
        if b.is_zero():
            return None, degree
        return b.to_uniterm(mode.r, 1 / mode.r), degree
    f = euler_class(-V)
    if mode.kind == ANTIDIAGONAL:
        f = f.restrict_antidiagonal(strict=False)
        if f.is_zero():
            return None, degree
    return factored_to_uniterm(f, 2, mode.point()), degree


def _wrap(value: Fraction, degree: int, mode: Mode):
    if mode.symbolic:
        return Laurent.monomial(value, degree)
    return value


def pt_integral(n_lam: ReversedPlanePartition, geom: LocalCurveGeometry,
                mode: Mode = SYMBOLIC, lifts=None, strategy: str = "series"):
    """The integral of e(-N^vir) over the double nested Hilbert scheme of P^1.

    Computed by C*-localisation: the fixed-point terms are summed as
    functions of s3 (resp. u) and evaluated at s3 = 0 (resp. u = 1).
    """
    _require_p1(geom)
    terms, degrees = [], set()
    for fp in fixed_points(n_lam):
        t, deg = fixed_point_term(n_lam, fp, geom, mode, lifts)
        degrees.add(deg)
        if t is not None:
            terms.append(t)
    if len(degrees) > 1:
        raise ArithmeticError(f"fixed-point terms of different degrees {sorted(degrees)}")
    value = sum_terms_at(terms, 1 if mode.kind == KTHEORY else 0, strategy)
    return _wrap(value, degrees.pop(), mode)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": bool(self.passed)}
        if self.detail:
            out["detail"] = self.detail
        return out


def c_lambda(lam: Partition) -> int:
    return sum(j - i for i, j in lam.boxes())


def cy_sign(lam: Partition, k1: int, size: int) -> int:
    return -1 if (k1 * (c_lambda(lam) + lam.size) + lam.size + size) % 2 else 1


def cy_sign_check(n_lam: ReversedPlanePartition, k1: int, k2: int,
                  strategy: str = "series") -> CheckResult:
    """Every fixed point contributes the same sign; the integral is sign * #points."""
    geom = LocalCurveGeometry(0, k1, k2)
    if not geom.is_calabi_yau:
        raise ValueError("cy_sign_check needs k1 + k2 = -2")
    sign = cy_sign(n_lam.shape, k1, n_lam.size)
    fps = fixed_points(n_lam)
    for fp in fps:
        t, deg = fixed_point_term(n_lam, fp, geom, SYMBOLIC)
        try:
            v = sum_terms_at([t] if t is not None else [], 0, strategy)
        except ZeroDivisionError as exc:
            return CheckResult("cy_sign", False, {"fixed_point": fp.to_json(), "error": str(exc)})
        if deg != 0 or v != sign:
            return CheckResult("cy_sign", False, {"fixed_point": fp.to_json(),
                                                  "value": str(v), "degree": deg,
                                                  "expected": sign})
    total = pt_integral(n_lam, geom, SYMBOLIC, strategy=strategy)
    ok = total == Laurent.constant(sign * len(fps))
    return CheckResult("cy_sign", ok, {"n_lambda": n_lam.to_json(), "sign": sign,
                                       "fixed_points": len(fps), "integral": str(total)})


def pt_local_series(lam: Partition, geom: LocalCurveGeometry, N: int,
                    mode: Mode = SYMBOLIC, lifts=None) -> TruncatedSeries:
    """sum over RPPs n of shape lam with |n| <= N of q^|n| * pt_integral."""
    if N < 0:
        raise ValueError("N must be non-negative")
    _require_p1(geom)
    coeffs = {}
    for n in range(N + 1):
        acc = mode.one() * 0
        for n_lam in enumerate_rpps(lam, n):
            acc = acc + pt_integral(n_lam, geom, mode, lifts)
        coeffs[n] = acc
    return TruncatedSeries.from_dict(coeffs, N + 1)


def cy_closed_series(lam: Partition, k1: int, N: int) -> TruncatedSeries:
    """sign * prod (1 - (-q)^h)^-2 for Calabi-Yau degrees on P^1."""
    sign = cy_sign(lam, k1, 0)
    return hook_product_series(lam, -2, N + 1).negate_argument().scale(Fraction(sign))


# ---------------------------------------------------------------------------
# size-zero normal bundle


def leading_term_euler(lam: Partition, geom: LocalCurveGeometry, mode: Mode = SYMBOLIC):
    """e(-N^vir) at the size-zero point, through the Euler class of the weights."""
    V = nvir_size0(lam, geom.g, geom.k1, geom.k2)
    if mode.kind == KTHEORY:
        return mode.evaluate_bracket(khat_bracket(-V))
    return mode.evaluate_euler(euler_class(-V))


def hook_product(lam: Partition) -> int:
    out = 1
    for h in lam.hooks():
        out *= h
    return out


def leading_term_closed(lam: Partition, geom: LocalCurveGeometry, mode: Mode = SYMBOLIC):
    """(-1)^(|l|(g-1+k2) + n k1 + nbar k2) * (s1^|l| prod h)^(2g-2-k1-k2)."""
    if mode.kind != ANTIDIAGONAL:
        raise ValueError("the closed leading term is an antidiagonal formula")
    g, k1, k2 = geom.g, geom.k1, geom.k2
    e = 2 * g - 2 - k1 - k2
    sign_exp = lam.size * (g - 1 + k2) + n_stat(lam) * k1 + n_stat(lam.conjugate()) * k2
    sign = -1 if sign_exp % 2 else 1
    return mode.s1_power(sign * Fraction(hook_product(lam)) ** e, lam.size * e)


def leading_term(lam: Partition, geom: LocalCurveGeometry, mode: Mode = SYMBOLIC):
    """Both routes to the leading coefficient; returns (euler route, closed route)."""
    return leading_term_euler(lam, geom, mode), leading_term_closed(lam, geom, mode)


__all__ = [
    "CheckResult", "c_lambda", "cy_closed_series", "cy_sign", "cy_sign_check",
    "fixed_point_term", "hook_product", "leading_term", "leading_term_closed",
    "leading_term_euler", "pt_integral", "pt_local_series", "UniTerm",
]
