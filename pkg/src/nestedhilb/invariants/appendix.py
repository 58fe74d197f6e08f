"""Brute-force checks of the combinatorial identities behind the leading term.

Box pairs run over ordered pairs ((i, j), (l, k)) of boxes of the diagram.
"""
from __future__ import annotations

from fractions import Fraction

from ..combinatorics import Partition, enumerate_partitions, n_stat
from .integrals import CheckResult, hook_product


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


def _pairs(lam: Partition):
    boxes = lam.boxes()
    return [(i, j, l, k) for i, j in boxes for l, k in boxes]


def g_poly(lam: Partition) -> dict:
    """g_l(t) as {exponent: coefficient}."""
    out: dict = {}

    def add(e, c):
        out[e] = out.get(e, 0) + c

    for i, j in lam.boxes():
        if i == j and i != 0:
            add(-i, 1)
    for i, j, l, k in _pairs(lam):
        a = i - l
        if a == j - k and a not in (0, 1):
            add(a, _sgn(a))
        a = j - k
        if i - l == a - 1 and a not in (0, 1):
            add(a, -_sgn(a))
    return {e: c for e, c in out.items() if c}


def h_poly(lam: Partition) -> dict:
    """h_l(t) as {exponent: coefficient}."""
    out: dict = {}

    def add(e, c):
        out[e] = out.get(e, 0) + c

    for i, j in lam.boxes():
        if i == j and i != 0:
            add(-i, 1)
    for i, j, l, k in _pairs(lam):
        a = i - l
        if a == j - k and a not in (0, 1):
            add(a, -1)
        a = j - k
        if i - l == a - 1 and a not in (0, 1):
            add(a, 1)
    return {e: c for e, c in out.items() if c}


def reflect(p: dict, sign: int = 1) -> dict:
    """sign * t * p(1/t)."""
    return {1 - e: sign * c for e, c in p.items()}


def split_symmetric(p: dict, sign: int = 1):
    """A with p = A(t) + sign * t * A(1/t), or None when p has no such form."""
    if reflect(p, sign) != p:
        return None
    return {e: c for e, c in p.items() if e >= 1}


def _factor_lists(lam: Partition):
    boxes = lam.boxes()
    single = [j - i for i, j in boxes]
    num = [1 + i - j + k - l for i, j, l, k in _pairs(lam)]
    den = [i - j + k - l for i, j, l, k in _pairs(lam)]
    return single, num, den


def sigma(lam: Partition) -> int:
    single, num, den = _factor_lists(lam)
    out = 1
    for x in single + num + den:
        if x:
            out *= _sgn(x)
    return out


def hook_identity(lam: Partition) -> tuple[Fraction, Fraction, Fraction]:
    """(product with |0| = 1, signed product with zero factors dropped, prod h)."""
    single, num, den = _factor_lists(lam)
    absval, signed = Fraction(1), Fraction(1)
    for x in single + num:
        absval *= abs(x) or 1
        if x:
            signed *= x
    for x in den:
        absval /= abs(x) or 1
        if x:
            signed /= x
    return absval, signed, Fraction(hook_product(lam))


def rho(lam: Partition, k1: int, k2: int) -> int:
    total = sum(i * k1 + j * k2 for i, j in lam.boxes() if i != j)
    for i, j, l, k in _pairs(lam):
        if 1 + i - j + k - l:
            total += (i - l + 1) * k1 + (j - k) * k2
        if i - j + k - l:
            total += (i - l) * k1 + (j - k) * k2
    return total


def sign_identity(lam: Partition, k1: int, k2: int) -> tuple[int, int]:
    """Both sides of (-1)^(rho + |l|(k1+k2)) sigma^(k1+k2) = (-1)^(|l|k2 + n k1 + nbar k2)."""
    s = sigma(lam)
    lhs = (-1 if (rho(lam, k1, k2) + lam.size * (k1 + k2)) % 2 else 1) * s ** ((k1 + k2) % 2)
    rexp = lam.size * k2 + n_stat(lam) * k1 + n_stat(lam.conjugate()) * k2
    return lhs, -1 if rexp % 2 else 1


def _tau(m1: int, m2: int) -> int:
    if m1 == m2:
        return -1 if m1 % 2 else 1
    return _sgn(m1 - m2)


def tau_product(lam: Partition) -> int:
    """prod tau(-i, -j) prod tau(i-l, j-k) tau(1+i-l, j-k); equals 1."""
    out = 1
    for i, j in lam.boxes():
        out *= _tau(-i, -j)
    for i, j, l, k in _pairs(lam):
        out *= _tau(i - l, j - k) * _tau(1 + i - l, j - k)
    return out


def appendix_suite(size_max: int, k_range=range(-3, 4)) -> CheckResult:
    """Run every identity on all diagrams with |l| <= size_max."""
    k_range = list(k_range)
    failures = []
    tested = 0
    for d in range(size_max + 1):
        for lam in enumerate_partitions(d):
            tested += 1
            g, h = g_poly(lam), h_poly(lam)
            if split_symmetric(g, 1) is None:
                failures.append({"lambda": str(lam), "check": "g_palindromic", "g": g})
            if split_symmetric(h, -1) is None:
                failures.append({"lambda": str(lam), "check": "h_antipalindromic", "h": h})
            absval, signed, hooks = hook_identity(lam)
            if absval != hooks:
                failures.append({"lambda": str(lam), "check": "hook_abs", "lhs": str(absval)})
            if signed != sigma(lam) * hooks:
                failures.append({"lambda": str(lam), "check": "hook_signed", "lhs": str(signed)})
            if tau_product(lam) != 1:
                failures.append({"lambda": str(lam), "check": "tau_product"})
            for k1 in k_range:
                for k2 in k_range:
                    lhs, rhs = sign_identity(lam, k1, k2)
                    if lhs != rhs:
                        failures.append({"lambda": str(lam), "check": "sign", "k": [k1, k2]})
    return CheckResult("appendix", not failures,
                       {"partitions_tested": tested, "k_range": [min(k_range), max(k_range)]
                        if k_range else [], "failures": failures[:20]})


__all__ = [
    "appendix_suite", "g_poly", "h_poly", "hook_identity", "reflect", "rho", "sigma",
    "sign_identity", "split_symmetric", "tau_product",
]
