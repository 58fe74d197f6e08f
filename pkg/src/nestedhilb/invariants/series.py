"""Generating series of local curves: PT, Euler characteristics, GW and the conifold."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..algebra.series import TruncatedSeries, hook_factor
from ..combinatorics import (Partition, enumerate_partitions, enumerate_rpps,
                             f_lambda_g, hook_product_series, n_stat)
from ..localization import fixed_points
from .integrals import CheckResult, c_lambda
from .modes import ANTIDIAGONAL, FULL, LocalCurveGeometry, Mode, SYMBOLIC
from .universal import universal_series_closed


def _partitions(d: int) -> list[Partition]:
    if d < 1:
        raise ValueError("degree must be positive")
    return enumerate_partitions(d)


def _min_shift(d: int, geom: LocalCurveGeometry) -> int:
    return min(f_lambda_g(lam, geom.g, geom.k1, geom.k2) for lam in _partitions(d))


def pt_series_d(d: int, geom: LocalCurveGeometry, N: int, mode: Mode = SYMBOLIC,
                route: str = "universal") -> TruncatedSeries:
    """PT_d(X; q), known through N orders past its lowest possible exponent.

    route "universal": sum over l |- d of (q^-|l| A)^(g-1) (q^-n B)^k1 (q^-nbar C)^k2
    with the closed universal series; route "display": the antidiagonal sum
    (-1)^(d k2) sum q^f prod (s1 h)^(2g-2-k1-k2) (1 - q^h)^(k1+k2) for PT_d(X; -q).
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if mode.kind == FULL and d != 1:
        raise ValueError("full equivariant series are only available in degree 1")
    prec = _min_shift(d, geom) + N + 1
    total = None
    for lam in _partitions(d):
        f = f_lambda_g(lam, geom.g, geom.k1, geom.k2)
        rel = prec - f
        if rel <= 0:
            continue
        if route == "universal":
            term = universal_series_closed(lam, rel - 1, mode).local_series(geom).shift(f)
        elif route == "display":
            if mode.kind != ANTIDIAGONAL:
                raise ValueError("the display formula is antidiagonal")
            term = _display_term(lam, geom, rel, mode).shift(f).negate_argument()
        else:
            raise ValueError(f"unknown route {route!r}")
        total = term if total is None else total + term
    if total is None:
        return TruncatedSeries.from_dict({}, prec)
    return total.truncate(prec)


def _display_term(lam, geom, rel, mode):
    K = geom.k1 + geom.k2
    e = 2 * geom.g - 2 - K
    H = 1
    for h in lam.hooks():
        H *= h
    sign = -1 if (lam.size * geom.k2) % 2 else 1
    c = mode.s1_power(sign * Fraction(H) ** e, lam.size * e)
    return hook_product_series(lam, K, rel).scale(c)


def euler_series(lam: Partition, g: int, N: int) -> TruncatedSeries:
    """prod (1 - q^h)^-(2 - 2g) mod q^(N+1)."""
    return hook_product_series(lam, 2 * g - 2, N + 1)


def pt_euler_series(d: int, geom: LocalCurveGeometry, N: int) -> TruncatedSeries:
    """sum over l |- d of q^f prod (1 - q^h)^(2g-2), N orders past the lowest shift."""
    prec = _min_shift(d, geom) + N + 1
    total = TruncatedSeries.from_dict({}, prec)
    for lam in _partitions(d):
        f = f_lambda_g(lam, geom.g, geom.k1, geom.k2)
        if prec - f > 0:
            total = total + euler_series(lam, geom.g, prec - f - 1).shift(f)
    return total


def pt_euler_count(d: int, geom: LocalCurveGeometry, N: int) -> TruncatedSeries:
    """Counts C*-fixed points of the T-fixed loci, placed at n = |n_l| + f (g = 0)."""
    if geom.g != 0:
        raise ValueError("fixed-point counting is done on P^1")
    prec = _min_shift(d, geom) + N + 1
    coeffs: dict = {}
    for lam in _partitions(d):
        f = f_lambda_g(lam, geom.g, geom.k1, geom.k2)
        for size in range(prec - f):
            count = sum(len(fixed_points(n_lam)) for n_lam in enumerate_rpps(lam, size))
            coeffs[size + f] = coeffs.get(size + f, 0) + Fraction(count)
    return TruncatedSeries.from_dict(coeffs, prec)


# ---------------------------------------------------------------------------
# Gromov-Witten side


@dataclass
class GWSeries:
    """GW_d = i^i_power * series, with series in Q on the half-integer grid."""
    series: TruncatedSeries
    i_power: int

    def real_series(self) -> TruncatedSeries:
        """The series with i^i_power applied; only for even powers of i."""
        if self.i_power % 2:
            raise ArithmeticError("odd power of i: GW_d is not real on its own")
        return self.series.scale(-1 if self.i_power == 2 else 1)


def gw_series(d: int, geom: LocalCurveGeometry, prec: int, mode: Mode = SYMBOLIC) -> GWSeries:
    """The closed antidiagonal GW partition function, known below Q^(prec/2).

    (-1)^(d(g-1-k2)) s1^(d e) sum Q^(c (k1-k2)/2) prod h^e i^-K (Q^(h/2) - Q^(-h/2))^K
    with K = k1 + k2 and e = 2g - 2 - K.  The i^-K per box is returned as
    i_power = -d K mod 4 rather than instantiated.
    """
    if mode.kind != ANTIDIAGONAL:
        raise ValueError("the GW closed formula is antidiagonal")
    g, k1, k2 = geom.g, geom.k1, geom.k2
    K = k1 + k2
    e = 2 * g - 2 - K
    sign = -1 if (d * (g - 1 - k2)) % 2 else 1
    total = TruncatedSeries.from_dict({}, prec, "Q", 2)
    for lam in _partitions(d):
        H, hsum = 1, 0
        for h in lam.hooks():
            H *= h
            hsum += h
        # (Q^(h/2) - Q^(-h/2))^K = (-1)^K Q^(-hK/2) (1 - Q^h)^K
        start = c_lambda(lam) * (k1 - k2) - K * hsum
        qprec = -(-(prec - start) // 2)
        if qprec <= 0:
            continue
        body = hook_product_series(lam, K, qprec).regrid(2).shift(start)
        c = mode.s1_power((-1 if (d * K) % 2 else 1) * sign * Fraction(H) ** e, d * e)
        total = total + body.scale(c).truncate(prec)
    return GWSeries(total, (-d * K) % 4)


def gw_pt_check(d: int, geom: LocalCurveGeometry, window: int = 8,
                mode: Mode = SYMBOLIC) -> CheckResult:
    """(-i)^D GW_d = (-q)^(-D/2) PT_d(X, q) under Q = -q, D = d(2 - 2g + k1 + k2).

    Both sides are multiplied by Q^(D/2): the GW side must then carry only
    integer powers of Q, and is compared with PT_d(X, q = -Q) over ``window``
    consecutive powers starting at the lowest PT exponent.
    """
    if window < 1:
        raise ValueError("window must be positive")
    g, k1, k2 = geom.g, geom.k1, geom.k2
    D = d * (2 - 2 * g + k1 + k2)
    lo = _min_shift(d, geom)
    top = lo + window
    gw = gw_series(d, geom, 2 * top - D, mode)
    ipow = (3 * D + gw.i_power) % 4
    if ipow % 2:
        raise ArithmeticError(f"residual odd power of i ({ipow}) in the GW/PT comparison")
    lhs = gw.series.shift(D).scale(-1 if ipow == 2 else 1)
    odd = [k for k, c in lhs.items() if k % 2]
    if odd:
        raise ArithmeticError(f"half-integer exponent Q^{Fraction(odd[0], 2)} survives")
    lhs_int = TruncatedSeries.from_dict({k // 2: c for k, c in lhs.items()}, lhs.prec // 2, "q")
    pt = pt_series_d(d, geom, window - 1, mode).negate_argument()
    k = lhs_int.first_mismatch(pt, top)
    detail = {"d": d, **geom.to_json(), "window": [lo, top], "D": D,
              "i_power_total": ipow}
    if k is not None:
        detail["first_mismatch"] = {"exponent": k, "gw": str(lhs_int.coeff(k)),
                                    "pt": str(pt.coeff(k))}
    return CheckResult("gw_pt", k is None, detail)


# ---------------------------------------------------------------------------
# resolved conifold


def conifold_product(Dmax: int, N: int) -> dict:
    """prod_{n >= 1} (1 - Q q^n)^n as {(Q degree, q degree): coeff}, truncated."""
    out = {(0, 0): 1}
    for n in range(1, N + 1):
        factor = {(j, n * j): (-1) ** j * comb(n, j)
                  for j in range(min(n, Dmax) + 1) if n * j <= N}
        new: dict = {}
        for (a, b), c in out.items():
            for (x, y), e in factor.items():
                if a + x <= Dmax and b + y <= N:
                    new[(a + x, b + y)] = new.get((a + x, b + y), 0) + c * e
        out = {k: v for k, v in new.items() if v}
    return out


def _principal_h(k: int, prec: int) -> TruncatedSeries:
    """Complete homogeneous h_k(1, q, q^2, ...) = prod_{i=1}^k (1 - q^i)^-1."""
    if k < 0:
        return TruncatedSeries.from_dict({}, prec)
    out = TruncatedSeries.one(prec)
    for i in range(1, k + 1):
        out = out * hook_factor(i, -1, prec)
    return out


def schur_principal(lam: Partition, prec: int) -> TruncatedSeries:
    """s_l(1, q, q^2, ...) by the Jacobi-Trudi determinant det h_(l_i - i + j)."""
    from itertools import permutations
    parts = lam.parts
    m = len(parts)
    if m == 0:
        return TruncatedSeries.one(prec)
    hs = {}
    total = TruncatedSeries.from_dict({}, prec)
    for perm in permutations(range(m)):
        inv = sum(1 for a in range(m) for b in range(a + 1, m) if perm[a] > perm[b])
        term = TruncatedSeries.one(prec)
        for i in range(m):
            k = parts[i] - i + perm[i]
            if k not in hs:
                hs[k] = _principal_h(k, prec)
            term = term * hs[k]
        total = total + (term if inv % 2 == 0 else -term)
    return total


def conifold_check(Dmax: int, N: int, mode: Mode = SYMBOLIC) -> CheckResult:
    """1 + sum Q^d PT_d(X; -q) = prod (1 - Q q^n)^n for X = Tot(O(-1) + O(-1)).

    Also compares each Q^d slice with sum (-q)^d q^(n + nbar) prod (1-q^h)^-2
    and with the Jacobi-Trudi form sum (-q)^d s_l(q) s_lbar(q).
    """
    geom = LocalCurveGeometry(0, -1, -1)
    prod = conifold_product(Dmax, N)
    detail: dict = {"Dmax": Dmax, "N": N, "slices": []}
    ok = True
    for d in range(0, Dmax + 1):
        target = TruncatedSeries.from_dict(
            {b: Fraction(c) for (a, b), c in prod.items() if a == d}, N + 1)
        if d == 0:
            pt = TruncatedSeries.one(N + 1)
            hook_side = schur_side = pt
        else:
            rel = max(N - _min_shift(d, geom), 0)
            pt = pt_series_d(d, geom, rel, mode).negate_argument().truncate(N + 1)
            pt = pt.map_coeffs(_as_rational)
            hook_side = TruncatedSeries.from_dict({}, N + 1)
            schur_side = TruncatedSeries.from_dict({}, N + 1)
            for lam in _partitions(d):
                shift = d + n_stat(lam) + n_stat(lam.conjugate())
                sgn = (-1) ** d
                if shift <= N:
                    hook_side = hook_side + hook_product_series(lam, -2, N + 1 - shift).shift(shift).scale(sgn)
                    s = schur_principal(lam, N + 1) * schur_principal(lam.conjugate(), N + 1)
                    schur_side = schur_side + s.shift(d).truncate(N + 1).scale(sgn)
        mism = {name: s.first_mismatch(target)
                for name, s in (("pt", pt), ("hooks", hook_side), ("schur", schur_side))}
        passed = all(v is None for v in mism.values())
        ok = ok and passed
        detail["slices"].append({"d": d, "pass": passed,
                                 "first_mismatch": {k: v for k, v in mism.items() if v is not None}})
    return CheckResult("conifold", ok, detail)


def _as_rational(c):
    """A degree-zero Laurent coefficient as a Fraction."""
    if isinstance(c, Fraction) or isinstance(c, int):
        return Fraction(c)
    if set(c.terms) - {0}:
        raise ArithmeticError(f"coefficient {c} depends on s1")
    return c.coeff(0)


__all__ = [
    "GWSeries", "conifold_check", "conifold_product", "euler_series", "gw_pt_check",
    "gw_series", "pt_euler_count", "pt_euler_series", "pt_series_d", "schur_principal",
]
