"""K-theoretic (twisted virtual structure sheaf) invariants under t1 t2 = 1."""
from __future__ import annotations

import random

from ..algebra.series import TruncatedSeries
from ..combinatorics import Partition, ReversedPlanePartition
from ..localization import VirtualRep, khat_bracket
from .integrals import CheckResult, pt_integral, pt_local_series
from .modes import KTHEORY, LocalCurveGeometry, Mode
from .universal import BASIS, universal_series_closed


def _need_k(mode: Mode):
    if mode.kind != KTHEORY:
        raise ValueError("K-theoretic invariants need a ktheory mode")


def ktheory_integral(n_lam: ReversedPlanePartition, geom: LocalCurveGeometry, mode: Mode):
    """sum over fixed points of [-T^vir - N^vir], at t1^(1/2) = r and t3 = 1."""
    _need_k(mode)
    return pt_integral(n_lam, geom, mode)


def ktheory_series(lam: Partition, geom: LocalCurveGeometry, N: int, mode: Mode) -> TruncatedSeries:
    _need_k(mode)
    return pt_local_series(lam, geom, N, mode)


def ktheory_closed_check(lam: Partition, N: int, mode: Mode) -> CheckResult:
    """Localisation series of the three P^1 geometries against the F_l closed forms."""
    _need_k(mode)
    closed = universal_series_closed(lam, N, mode)
    mism = {}
    for geom in BASIS:
        k = ktheory_series(lam, geom, N, mode).first_mismatch(closed.local_series(geom))
        if k is not None:
            mism[f"{geom.k1},{geom.k2}"] = k
    return CheckResult("ktheory_closed", not mism,
                       {"lambda": str(lam), "N": N, "t1_half": str(mode.r), "mismatch": mism})


def random_rep(rng: random.Random, size: int = 6, spread: int = 3) -> VirtualRep:
    out = {}
    for _ in range(rng.randint(1, size)):
        w = tuple(rng.randint(-spread, spread) for _ in range(3))
        if any(w):
            out[w] = out.get(w, 0) + rng.choice([-2, -1, 1, 1, 2])
    return VirtualRep(out)


def dual_bracket_check(count: int = 100, seed: int = 0) -> CheckResult:
    """[V^dual] = (-1)^rk V [V] on random representations."""
    rng = random.Random(seed)
    for _ in range(count):
        V = random_rep(rng)
        lhs = khat_bracket(V.dual())
        rhs = khat_bracket(V) * (-1 if V.rank % 2 else 1)
        if lhs != rhs:
            return CheckResult("bracket_dual", False, {"rep": V.to_json()})
    return CheckResult("bracket_dual", True, {"count": count, "seed": seed})


__all__ = ["dual_bracket_check", "ktheory_closed_check", "ktheory_integral",
           "ktheory_series", "random_rep"]
