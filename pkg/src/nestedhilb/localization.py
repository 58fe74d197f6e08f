"""Equivariant K-theory at the torus-fixed points of double nested Hilbert schemes of P^1.

Characters of T x C* are integer weight vectors (m1, m2, m3) standing for
t1^m1 t2^m2 t3^m3.  On P^1 the coordinate x at 0 has weight t3, so the
tangent spaces are T_0 = t3^-1 and T_inf = t3, and the canonical bundle
has fibres t3 at 0 and t3^-1 at infinity.

A line bundle of degree m is recorded by its fibre characters at 0 and
infinity; their t3 exponents differ by exactly m.  O(n0*[0] + ninf*[inf])
has fibres t3^-n0 and t3^ninf.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra.brackets import BracketProduct
from .algebra.factored import FactoredRational
from .combinatorics import Partition, ReversedPlanePartition

Weight = tuple  # (m1, m2, m3)


class VirtualRep:
    """Finitely supported map weight -> integer multiplicity."""

    __slots__ = ("weights",)

    def __init__(self, weights=None):
        clean = {}
        for w, m in (weights or {}).items():
            w = tuple(w)
            if len(w) == 2:
                w = w + (0,)
            clean[w] = clean.get(w, 0) + int(m)
        self.weights = {w: m for w, m in clean.items() if m}

    @classmethod
    def character(cls, w, mult: int = 1):
        return cls({tuple(w): mult})

    def __add__(self, other):
        out = dict(self.weights)
        for w, m in other.weights.items():
            out[w] = out.get(w, 0) + m
        return VirtualRep(out)

    def __neg__(self):
        return VirtualRep({w: -m for w, m in self.weights.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return VirtualRep({w: m * other for w, m in self.weights.items()})
        out: dict = {}
        for w1, m1 in self.weights.items():
            for w2, m2 in other.weights.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                out[w] = out.get(w, 0) + m1 * m2
        return VirtualRep(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, VirtualRep) and self.weights == other.weights

    def __hash__(self):
        return hash(tuple(sorted(self.weights.items())))

    def __bool__(self):
        return bool(self.weights)

    @property
    def rank(self) -> int:
        return sum(self.weights.values())

    def dual(self) -> "VirtualRep":
        return dual_rep(self)

    def twist(self, w) -> "VirtualRep":
        return twist_rep(self, w)

    def fixed_part(self) -> "VirtualRep":
        """Weights trivial on T, i.e. (0, 0, *)."""
        return VirtualRep({w: m for w, m in self.weights.items() if w[0] == 0 and w[1] == 0})

    def moving_part(self) -> "VirtualRep":
        return VirtualRep({w: m for w, m in self.weights.items() if w[0] or w[1]})

    def forget_t3(self) -> "VirtualRep":
        out: dict = {}
        for w, m in self.weights.items():
            k = (w[0], w[1], 0)
            out[k] = out.get(k, 0) + m
        return VirtualRep(out)

    def to_json(self) -> list:
        return [{"weight": list(w), "mult": m} for w, m in sorted(self.weights.items())]

    def __repr__(self):
        return "VirtualRep(" + ", ".join(f"{m}*{w}" for w, m in sorted(self.weights.items())) + ")"


def dual_rep(V: VirtualRep) -> VirtualRep:
    return VirtualRep({tuple(-x for x in w): m for w, m in V.weights.items()})


def twist_rep(V: VirtualRep, w) -> VirtualRep:
    w = tuple(w) + (0,) * (3 - len(w))
    return VirtualRep({tuple(a + b for a, b in zip(v, w)): m for v, m in V.weights.items()})


@dataclass(frozen=True)
class EquivLineBundleP1:
    degree: int
    weight_at_0: Weight
    weight_at_inf: Weight

    def __post_init__(self):
        if self.weight_at_0[:2] != self.weight_at_inf[:2]:
            raise ValueError("T acts fibrewise: T-weights at 0 and infinity must agree")
        if self.weight_at_inf[2] - self.weight_at_0[2] != self.degree:
            raise ValueError("t3 weights inconsistent with the degree")

    @classmethod
    def make(cls, t_weight=(0, 0), m: int = 0, lift: int = 0, n0: int = 0, ninf: int = 0):
        """O(m) with fibre t3^lift at 0, twisted by n0*[0] + ninf*[inf], times t^t_weight."""
        a, b = t_weight
        w0 = (a, b, lift - n0)
        winf = (a, b, lift + m + ninf)
        return cls(m + n0 + ninf, w0, winf)

    @classmethod
    def canonical_power(cls, a: int, t_weight=(0, 0)):
        return cls.make(t_weight, m=-2 * a, lift=a)


def _divide_one_minus_t(num: dict) -> dict:
    """Exact quotient of a Laurent polynomial in t by (1 - t)."""
    num = {e: c for e, c in num.items() if c}
    if not num:
        return {}
    if sum(num.values()) != 0:
        raise ArithmeticError("geometric tails do not cancel")
    lo, hi = min(num), max(num)
    out = {}
    carry = 0
    # q(t) (1 - t) = num  =>  q_e = num_e + q_{e-1}
    for e in range(lo, hi):
        carry += num.get(e, 0)
        if carry:
            out[e] = carry
    return out


def chi_p1(L: EquivLineBundleP1) -> VirtualRep:
    """Euler characteristic of L by localisation at the two fixed points.

    L_0 / (1 - t3) + L_inf / (1 - t3^-1) = (L_0 - t3 L_inf) / (1 - t3).
    """
    a, b, p = L.weight_at_0
    r = L.weight_at_inf[2]
    num = {p: 1}
    num[r + 1] = num.get(r + 1, 0) - 1
    q = _divide_one_minus_t(num)
    return VirtualRep({(a, b, e): c for e, c in q.items()})


# ---------------------------------------------------------------------------
# fixed points


@dataclass(frozen=True)
class FixedPoint:
    a: ReversedPlanePartition
    b: ReversedPlanePartition

    def __post_init__(self):
        if self.a.shape != self.b.shape:
            raise ValueError("components of a fixed point must share a shape")

    def divisor(self, box) -> tuple[int, int]:
        """Z at box: (multiplicity at 0, multiplicity at infinity)."""
        return self.a[box], self.b[box]

    def to_json(self) -> dict:
        return {"a": self.a.to_json(), "b": self.b.to_json()}


def _check_split(n_lam: ReversedPlanePartition, fp: FixedPoint):
    if fp.a.shape != n_lam.shape:
        raise ValueError("fixed point shape differs from n_lambda")
    for box in n_lam.shape.boxes():
        if fp.a[box] + fp.b[box] != n_lam[box]:
            raise ValueError(f"fixed point does not split n_lambda at {box}")


def _chi_OZ_Z(n0: int, ninf: int) -> VirtualRep:
    """chi(O_Z(Z)) = chi(O(Z)) - chi(O) for Z = n0*[0] + ninf*[inf]."""
    return (chi_p1(EquivLineBundleP1.make(n0=n0, ninf=ninf))
            - chi_p1(EquivLineBundleP1.make()))


def tvir_fixed_point(n_lam: ReversedPlanePartition, fp: FixedPoint) -> VirtualRep:
    """Virtual tangent space of the double nested Hilbert scheme at fp."""
    _check_split(n_lam, fp)
    lam = n_lam.shape
    Z = fp.divisor
    out = _chi_OZ_Z(*Z((0, 0)))
    for i, j in lam.boxes():
        if i >= 1:
            out += _chi_OZ_Z(*_diff(Z((i, j)), Z((i - 1, j))))
        if j >= 1:
            out += _chi_OZ_Z(*_diff(Z((i, j)), Z((i, j - 1))))
        if i >= 1 and j >= 1:
            out -= _chi_OZ_Z(*_diff(Z((i, j)), Z((i - 1, j - 1))))
    return out


def _diff(z1, z2):
    return z1[0] - z2[0], z1[1] - z2[1]


# ---------------------------------------------------------------------------
# the obstruction theory


def default_lifts(k1: int, k2: int) -> tuple[int, int]:
    """C*-linearisations of L1 = O(k1), L2 = O(k2): their fibre t3-weights at 0.

    When k1 + k2 = -2 the weights add up to 1 so that L1 (x) L2 is the
    canonical bundle equivariantly; otherwise both are 0.
    """
    return (0, 1) if k1 + k2 == -2 else (0, 0)


class _Twists:
    """Builds chi(O(D) (x) K^c (x) L1^x L2^y) t1^u t2^v for fixed geometry."""

    def __init__(self, k1, k2, lifts):
        self.k1, self.k2 = k1, k2
        self.c1, self.c2 = lifts
        self.cache: dict = {}

    def chi(self, D, x, y, canon, tw) -> VirtualRep:
        key = (D, x, y, canon, tw)
        hit = self.cache.get(key)
        if hit is None:
            m = -2 * canon + x * self.k1 + y * self.k2
            lift = canon + x * self.c1 + y * self.c2
            L = EquivLineBundleP1.make(tw, m=m, lift=lift, n0=D[0], ninf=D[1])
            hit = chi_p1(L)
            self.cache[key] = hit
        return hit


def evee_fixed_point(n_lam: ReversedPlanePartition, fp: FixedPoint, k1: int, k2: int,
                     lifts=None) -> VirtualRep:
    """Full T x C* character of the dual obstruction theory at fp (C = P^1).

    Terms, with F_ij = O(Z_ij) L1^-i L2^-j t1^-i t2^-j:
      sum chi(F_ij)
      - sum chi(F_ij (x) K_X)^dual, K_X = K_C L1^-1 L2^-1 t1^-1 t2^-1
      - sum over pairs chi((1 - L1 t1 - L2 t2 + L1 L2 t1 t2)(Z_lk - Z_ij)
                           (x) L1^(i-l) L2^(j-k)) t1^(i-l) t2^(j-k)
    """
    _check_split(n_lam, fp)
    if lifts is None:
        lifts = default_lifts(k1, k2)
    tw = _Twists(k1, k2, lifts)
    boxes = n_lam.shape.boxes()
    Z = {b: fp.divisor(b) for b in boxes}
    out: dict = {}

    def acc(rep: VirtualRep, sign: int, dualise: bool = False):
        for w, m in rep.weights.items():
            if dualise:
                w = (-w[0], -w[1], -w[2])
            out[w] = out.get(w, 0) + sign * m

    for i, j in boxes:
        D = Z[(i, j)]
        acc(tw.chi(D, -i, -j, 0, (-i, -j)), 1)
        acc(tw.chi(D, -i - 1, -j - 1, 1, (-i - 1, -j - 1)), -1, dualise=True)
    for i, j in boxes:
        for l, k in boxes:
            D = _diff(Z[(l, k)], Z[(i, j)])
            x, y = i - l, j - k
            acc(tw.chi(D, x, y, 0, (x, y)), -1)
            acc(tw.chi(D, x + 1, y, 0, (x + 1, y)), 1)
            acc(tw.chi(D, x, y + 1, 0, (x, y + 1)), 1)
            acc(tw.chi(D, x + 1, y + 1, 0, (x + 1, y + 1)), -1)
    return VirtualRep(out)


def omega_fixed_point(n_lam: ReversedPlanePartition, fp: FixedPoint, k1: int, k2: int,
                      lifts=None) -> VirtualRep:
    """The explicit representative of Omega at fp, for Calabi-Yau degrees."""
    _check_split(n_lam, fp)
    if lifts is None:
        lifts = default_lifts(k1, k2)
    tw = _Twists(k1, k2, lifts)
    boxes = n_lam.shape.boxes()
    Z = {b: fp.divisor(b) for b in boxes}
    out = VirtualRep()
    for i, j in boxes:
        if (i, j) != (0, 0):
            out += tw.chi(Z[(i, j)], -i, -j, 0, (-i, -j))
    for i, j in boxes:
        for l, k in boxes:
            D = _diff(Z[(l, k)], Z[(i, j)])
            x, y = i - l, j - k
            if (x, y) not in ((0, 0), (1, 1)):
                out -= tw.chi(D, x, y, 0, (x, y))
            if (x + 1, y) not in ((0, 0), (1, 1)):
                out += tw.chi(D, x + 1, y, 0, (x + 1, y))
    return out


def mu_nu_lists(lam: Partition):
    """Weight lists of the size-zero normal bundle (no exclusions applied)."""
    boxes = lam.boxes()
    mu = [(-i, -j) for i, j in boxes]
    mu += [(i - l + 1, j - k) for i, j in boxes for l, k in boxes]
    nu = [(i - l, j - k) for i, j in boxes for l, k in boxes]
    return mu, nu


def nvir_size0(lam: Partition, g: int, k1: int, k2: int) -> VirtualRep:
    """Virtual normal bundle at the size-zero point over a genus g curve."""
    mu, nu = mu_nu_lists(lam)
    out: dict = {}

    def put(w, m):
        w = (w[0], w[1], 0)
        out[w] = out.get(w, 0) + m

    for sign, ws in ((1, mu), (-1, nu)):
        for w in ws:
            m = w[0] * k1 + w[1] * k2
            put(w, sign * (m + 1 - g))
            put((1 - w[0], 1 - w[1]), -sign * (m + g - 1 - k1 - k2))
    return VirtualRep(out)


def evee_size0_riemann_roch(lam: Partition, g: int, k1: int, k2: int) -> VirtualRep:
    """The dual obstruction theory at the size-zero point by Riemann-Roch.

    Same three sums as evee_fixed_point with all divisors zero and
    chi(L) = deg L + 1 - g on a genus g curve.
    """
    boxes = lam.boxes()
    out: dict = {}

    def put(w, m):
        w = (w[0], w[1], 0)
        out[w] = out.get(w, 0) + m

    def chi(x, y, canon):
        return canon * (2 * g - 2) + x * k1 + y * k2 + 1 - g

    for i, j in boxes:
        put((-i, -j), chi(-i, -j, 0))
        put((i + 1, j + 1), -chi(-i - 1, -j - 1, 1))
    for i, j in boxes:
        for l, k in boxes:
            x, y = i - l, j - k
            for dx, dy, s in ((0, 0, -1), (1, 0, 1), (0, 1, 1), (1, 1, -1)):
                put((x + dx, y + dy), s * chi(x + dx, y + dy, 0))
    return VirtualRep(out)


def euler_class(V: VirtualRep) -> FactoredRational:
    """prod (m . s)^mult over the weights of V."""
    out = FactoredRational(1)
    for w, m in V.weights.items():
        if not any(w):
            raise ZeroDivisionError("Euler class undefined: zero weight present")
        out = out * FactoredRational.from_form(w, m)
    return out


def khat_bracket(V: VirtualRep) -> BracketProduct:
    """prod [t^m]^mult over the weights of V."""
    out = BracketProduct(1)
    for w, m in V.weights.items():
        if not any(w):
            raise ZeroDivisionError("bracket undefined: zero weight present")
        out = out * BracketProduct.from_weight(w, m)
    return out


def fixed_points(n_lam: ReversedPlanePartition) -> list[FixedPoint]:
    from .combinatorics import enumerate_fixed_points
    return [FixedPoint(a, b) for a, b in enumerate_fixed_points(n_lam)]


__all__ = [
    "EquivLineBundleP1", "FixedPoint", "VirtualRep", "chi_p1", "default_lifts",
    "dual_rep", "euler_class", "evee_fixed_point", "evee_size0_riemann_roch",
    "fixed_points", "khat_bracket", "mu_nu_lists", "nvir_size0", "omega_fixed_point",
    "tvir_fixed_point", "twist_rep",
]
