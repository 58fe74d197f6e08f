"""The verification suites, one per checked statement.

Every suite returns a CheckResult.  ``quick`` shrinks the ranges so that
the whole collection runs in well under a minute.
"""
from __future__ import annotations

import time
from fractions import Fraction

from ..algebra.laurent import Laurent
from ..combinatorics import (Partition, enumerate_partitions, enumerate_rpps, graph_stats,
                             hook_product_series, rpp_count_series)
from ..localization import (EquivLineBundleP1, VirtualRep, chi_p1, evee_fixed_point,
                            fixed_points, omega_fixed_point, tvir_fixed_point)
from .appendix import appendix_suite
from .integrals import (CheckResult, c_lambda, cy_closed_series, cy_sign, cy_sign_check,
                        hook_product, pt_integral, pt_local_series)
from .ktheory import dual_bracket_check, ktheory_closed_check
from .modes import ANTIDIAGONAL, FULL, KTHEORY, SYMBOLIC, LocalCurveGeometry, sample_modes
from .series import conifold_check, gw_pt_check, pt_euler_count, pt_euler_series
from .symbolic import symbolic_integral
from .universal import universal_series_closed, universal_series_extract


def _diagrams(size_max: int, size_min: int = 1):
    for d in range(size_min, size_max + 1):
        yield from enumerate_partitions(d)


def _rpps(lam: Partition, n_max: int, n_min: int = 0):
    for n in range(n_min, n_max + 1):
        yield from enumerate_rpps(lam, n)


def _result(name, failures, **detail):
    detail["failures"] = failures[:10]
    return CheckResult(name, not failures, detail)


# ---------------------------------------------------------------------------
# combinatorics


def rpp_hook_suite(size_max: int = 5, N: int = 12) -> CheckResult:
    """Enumerated RPP counts against prod (1 - q^h)^-1."""
    failures = []
    for lam in _diagrams(size_max):
        k = rpp_count_series(lam, N).first_mismatch(hook_product_series(lam, -1, N + 1))
        if k is not None:
            failures.append({"lambda": str(lam), "n": k})
    return _result("rpp_hook", failures, size_max=size_max, N=N)


def graph_suite(size_max: int = 10) -> CheckResult:
    """V - E + Q - 1 = 0 for the grid graph of every diagram."""
    failures, tested = [], 0
    for lam in _diagrams(size_max):
        tested += 1
        if graph_stats(lam).euler_relation() != 0:
            failures.append(str(lam))
    return _result("graph_relation", failures, size_max=size_max, partitions_tested=tested)


# ---------------------------------------------------------------------------
# P^1 representations


def _t3_sum(pairs) -> VirtualRep:
    out: dict = {}
    for e, c in pairs:
        out[(0, 0, e)] = out.get((0, 0, e), 0) + c
    return VirtualRep(out)


def _canon(a: int, n0: int = 0, ninf: int = 0) -> VirtualRep:
    """chi(K^a (n0 [0] + ninf [inf]))."""
    return chi_p1(EquivLineBundleP1.make(m=-2 * a, lift=a, n0=n0, ninf=ninf))


def p1_identity_suite(a_range=range(-4, 5), n_max: int = 5) -> CheckResult:
    """chi(K^a), chi(O_Z(Z)), chi(O_Z K^a), RHom(O_Z, K^a) against the closed sums.

    The left sides come from localisation of line bundles on P^1 and the
    sequences 0 -> O(-Z) -> O -> O_Z -> 0, 0 -> O -> O(Z) -> O_Z(Z) -> 0.
    """
    failures = []
    for a in a_range:
        lhs = _canon(a)
        if a <= 0:
            rhs = _t3_sum((i, 1) for i in range(a, -a + 1))
        else:
            rhs = _t3_sum((i, -1) for i in range(-a + 1, a))
        if lhs != rhs:
            failures.append({"identity": "chi(K^a)", "a": a})
        for n0 in range(n_max + 1):
            for ninf in range(n_max + 1):
                got = _canon(a) - _canon(a, -n0, -ninf)
                want = _t3_sum([(a + i, 1) for i in range(n0)]
                               + [(-a - i, 1) for i in range(ninf)])
                if got != want:
                    failures.append({"identity": "chi(O_Z K^a)", "a": a, "n": [n0, ninf]})
                got = _canon(a) - _canon(a, n0, ninf)
                want = _t3_sum([(a - i - 1, -1) for i in range(n0)]
                               + [(-a + i + 1, -1) for i in range(ninf)])
                if got != want:
                    failures.append({"identity": "RHom(O_Z, K^a)", "a": a, "n": [n0, ninf]})
                if a == 0:
                    got = _canon(0, n0, ninf) - _canon(0)
                    want = _t3_sum([(-i, 1) for i in range(1, n0 + 1)]
                                   + [(i, 1) for i in range(1, ninf + 1)])
                    if got != want:
                        failures.append({"identity": "chi(O_Z(Z))", "n": [n0, ninf]})
    a_range = list(a_range)
    return _result("p1_identities", failures, a_range=[a_range[0], a_range[-1]], n_max=n_max)


FIXED_PART_DEGREES = ((0, 0), (-1, -1), (0, -2), (1, 0), (2, -3))


def fixed_part_suite(size_max: int = 3, n_max: int = 3, degrees=FIXED_PART_DEGREES) -> CheckResult:
    """The T-fixed part of the dual obstruction theory is the virtual tangent space."""
    failures, points = [], 0
    for lam in _diagrams(size_max):
        for n_lam in _rpps(lam, n_max):
            for fp in fixed_points(n_lam):
                points += 1
                T = tvir_fixed_point(n_lam, fp)
                for k1, k2 in degrees:
                    if evee_fixed_point(n_lam, fp, k1, k2).fixed_part() != T:
                        failures.append({"n_lambda": n_lam.to_json(), "fixed_point": fp.to_json(),
                                         "k": [k1, k2]})
    return _result("fixed_part", failures, size_max=size_max, n_max=n_max,
                   fixed_points=points, degrees=[list(k) for k in degrees])


# ---------------------------------------------------------------------------
# integrals on P^1


def trivial_bundle_suite(size_max: int = 3, n_max: int = 4, samples: int = 3,
                         symbolic_size: int = 2, seed=None) -> CheckResult:
    """k = (0, 0): the integral vanishes for n != 0 and is (-s1^2)^-|l| prod h^-2 at n = 0.

    Checked at random s1 and once with s1, s2, s3 kept symbolic.
    """
    geom = LocalCurveGeometry(0, 0, 0)
    modes = sample_modes(ANTIDIAGONAL, samples, seed)
    failures = []
    for lam in _diagrams(size_max):
        d, H = lam.size, hook_product(lam)
        for n_lam in _rpps(lam, n_max):
            for mode in modes:
                want = 0 if n_lam.size else (-mode.s1 ** 2) ** -d / Fraction(H) ** 2
                got = pt_integral(n_lam, geom, mode)
                if got != want:
                    failures.append({"n_lambda": n_lam.to_json(), "s1": str(mode.s1),
                                     "value": str(got)})
            if d <= symbolic_size:
                want = Laurent() if n_lam.size else Laurent.monomial(
                    Fraction(-1 if d % 2 else 1, H ** 2), -2 * d)
                _, got = symbolic_integral(n_lam, geom)
                if got != want:
                    failures.append({"n_lambda": n_lam.to_json(), "route": "symbolic",
                                     "value": str(got)})
    return _result("trivial_bundle", failures, size_max=size_max, n_max=n_max,
                   s1_samples=[str(m.s1) for m in modes], symbolic_size=symbolic_size)


CY_DIAGRAMS = ("1", "2", "1,1", "2,1")
CY_DEGREES = ((-1, -1), (0, -2), (-2, 0))


def cy_suite(diagrams=CY_DIAGRAMS, n_max: int = 4, degrees=CY_DEGREES, N: int = 4) -> CheckResult:
    """Calabi-Yau degrees on P^1.

    Per fixed point: the sign of each contribution, the Serre duality shape
    E^dual = T - T^dual t1 t2 + Omega - Omega^dual t1 t2 and the parity of
    rk(T + Omega).  Per diagram: the generating series mod q^(N+1).
    """
    t1t2 = (1, 1, 0)
    failures = []
    for text in diagrams:
        lam = Partition.parse(text)
        for k1, k2 in degrees:
            for n_lam in _rpps(lam, n_max):
                res = cy_sign_check(n_lam, k1, k2)
                if not res.passed:
                    failures.append({"check": "sign", "k": [k1, k2], **res.detail})
                parity = (k1 * (c_lambda(lam) + lam.size) + lam.size + n_lam.size) % 2
                for fp in fixed_points(n_lam):
                    E = evee_fixed_point(n_lam, fp, k1, k2)
                    T = tvir_fixed_point(n_lam, fp)
                    W = omega_fixed_point(n_lam, fp, k1, k2)
                    if E != T - T.dual().twist(t1t2) + W - W.dual().twist(t1t2):
                        failures.append({"check": "serre", "k": [k1, k2],
                                         "fixed_point": fp.to_json()})
                    if (T + W).rank % 2 != parity:
                        failures.append({"check": "parity", "k": [k1, k2],
                                         "fixed_point": fp.to_json()})
            geom = LocalCurveGeometry(0, k1, k2)
            k = pt_local_series(lam, geom, N).first_mismatch(
                cy_closed_series(lam, k1, N).map_coeffs(Laurent.constant))
            if k is not None:
                failures.append({"check": "series", "lambda": text, "k": [k1, k2], "n": k})
    return _result("calabi_yau", failures, diagrams=list(diagrams), n_max=n_max,
                   degrees=[list(k) for k in degrees], N=N)


# ---------------------------------------------------------------------------
# universal series


def full_degree_one_suite(samples: int = 3, N: int = 5, seed=None) -> CheckResult:
    """lambda = (1) with independent s1, s2: A = s1 s2, B = (1+q)/s1, C = (1+q)/s2."""
    lam = Partition((1,))
    failures = []
    modes = sample_modes(FULL, samples, seed)
    for mode in modes:
        got = universal_series_extract(lam, N, mode)
        mism = got.first_mismatch(universal_series_closed(lam, N, mode))
        if mism is not None:
            failures.append({"s1": str(mode.s1), "s2": str(mode.s2), "series": mism[0],
                             "n": mism[1]})
    return _result("full_degree_one", failures, N=N,
                   samples=[[str(m.s1), str(m.s2)] for m in modes])


def universal_suite(size_max: int = 3, N: int = 7) -> CheckResult:
    """Extracted antidiagonal A, B, C against the closed forms, mod q^(N+1)."""
    failures = []
    for lam in _diagrams(size_max):
        mism = universal_series_extract(lam, N, SYMBOLIC).first_mismatch(
            universal_series_closed(lam, N, SYMBOLIC))
        if mism is not None:
            failures.append({"lambda": str(lam), "series": mism[0], "n": mism[1]})
    return _result("universal", failures, size_max=size_max, N=N)


# ---------------------------------------------------------------------------
# partition functions


def gw_pt_degrees(g: int):
    return ((0, 0), (-1, -1), (0, 2 * g - 2))


def gw_pt_suite(d_max: int = 3, genera=(0, 1, 2), window: int = 8) -> CheckResult:
    failures, runs = [], 0
    for g in genera:
        for k1, k2 in gw_pt_degrees(g):
            for d in range(1, d_max + 1):
                runs += 1
                try:
                    res = gw_pt_check(d, LocalCurveGeometry(g, k1, k2), window)
                except ArithmeticError as exc:
                    failures.append({"d": d, "g": g, "k": [k1, k2], "error": str(exc)})
                    continue
                if not res.passed:
                    failures.append(res.detail)
    return _result("gw_pt", failures, d_max=d_max, genera=list(genera), window=window,
                   comparisons=runs)


def conifold_suite(Dmax: int = 3, N: int = 10) -> CheckResult:
    return conifold_check(Dmax, N)


def ktheory_suite(size_max: int = 2, N: int = 3, samples: int = 3, reps: int = 100,
                  seed=None) -> CheckResult:
    """Bracket localisation against the F_l closed forms, and [V^dual] = (-1)^rk [V]."""
    modes = sample_modes(KTHEORY, samples, seed)
    failures = []
    for mode in modes:
        for lam in _diagrams(size_max):
            res = ktheory_closed_check(lam, N, mode)
            if not res.passed:
                failures.append(res.detail)
    dual = dual_bracket_check(reps, 0 if seed is None else seed)
    if not dual.passed:
        failures.append(dual.detail)
    return _result("ktheory", failures, size_max=size_max, N=N, reps=reps,
                   t1_half=[str(m.r) for m in modes])


EULER_DEGREES = ((0, 0), (-1, -1))


def euler_suite(d_max: int = 2, degrees=EULER_DEGREES, N: int = 7) -> CheckResult:
    """Euler characteristic series against fixed-point counts, N orders past the lowest shift."""
    failures = []
    for k1, k2 in degrees:
        geom = LocalCurveGeometry(0, k1, k2)
        for d in range(1, d_max + 1):
            k = pt_euler_series(d, geom, N).first_mismatch(pt_euler_count(d, geom, N))
            if k is not None:
                failures.append({"d": d, "k": [k1, k2], "n": k})
    return _result("pt_euler", failures, d_max=d_max, degrees=[list(k) for k in degrees], N=N)


# ---------------------------------------------------------------------------
# the collection


def criteria(quick: bool = False, seed=None):
    """(number, title, thunk, time budget in seconds) for each checked statement."""
    q = quick
    return [
        (1, "RPP counts vs hook product", lambda: rpp_hook_suite(4 if q else 5, 8 if q else 12), 10),
        (2, "graph relation V-E+Q-1=0", lambda: graph_suite(7 if q else 10), 1),
        (3, "appendix identities", lambda: appendix_suite(5 if q else 8), 60),
        (4, "P^1 cohomology identities", lambda: p1_identity_suite(), 1),
        (5, "fixed part of E^dual = T^vir", lambda: fixed_part_suite(2 if q else 3, 2 if q else 3), 30),
        (6, "trivial bundle vanishing and leading term",
         lambda: trivial_bundle_suite(2 if q else 3, 3 if q else 4, seed=seed), 60),
        (7, "Calabi-Yau sign and series",
         lambda: cy_suite(CY_DIAGRAMS[:3] if q else CY_DIAGRAMS, 3 if q else 4), 120),
        (8, "degree one full equivariant", lambda: full_degree_one_suite(3, 5, seed=seed), 30),
        (9, "universal series extract vs closed", lambda: universal_suite(2 if q else 3, 7), 180),
        (10, "GW/PT correspondence", lambda: gw_pt_suite(2 if q else 3), 180),
        (11, "resolved conifold", lambda: conifold_suite(2 if q else 3, 8 if q else 10), 60),
        (12, "K-theoretic suite", lambda: ktheory_suite(1 if q else 2, 3, seed=seed), 120),
        (13, "PT Euler characteristic series", lambda: euler_suite(2, N=5 if q else 7), 60),
    ]


def run_criterion(number: int, quick: bool = False, seed=None) -> tuple[CheckResult, float]:
    for num, title, thunk, budget in criteria(quick, seed):
        if num == number:
            t0 = time.perf_counter()
            res = thunk()
            elapsed = time.perf_counter() - t0
            res.detail["criterion"] = num
            res.detail["title"] = title
            return res, elapsed
    raise ValueError(f"no criterion {number}")


__all__ = [
    "conifold_suite", "criteria", "cy_suite", "euler_suite", "fixed_part_suite",
    "full_degree_one_suite", "graph_suite", "gw_pt_suite", "ktheory_suite",
    "p1_identity_suite", "rpp_hook_suite", "run_criterion", "trivial_bundle_suite",
    "universal_suite",
]
