"""Local curve data and the evaluation modes for equivariant parameters."""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.brackets import BracketProduct
from ..algebra.factored import FactoredRational
from ..algebra.laurent import Laurent

SEED_ENV = "NESTEDHILB_SEED"
DEFAULT_SEED = 20240917

ANTIDIAGONAL = "antidiagonal"
FULL = "full"
KTHEORY = "ktheory"
KINDS = (ANTIDIAGONAL, FULL, KTHEORY)


@dataclass(frozen=True)
class LocalCurveGeometry:
    """Tot(L1 + L2) over a genus g curve with deg L1 = k1, deg L2 = k2."""
    g: int
    k1: int
    k2: int

    def __post_init__(self):
        for name in ("g", "k1", "k2"):
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.g < 0:
            raise ValueError("genus must be non-negative")

    @property
    def is_calabi_yau(self) -> bool:
        return self.k1 + self.k2 == 2 * self.g - 2

    def to_json(self) -> dict:
        return {"g": self.g, "k1": self.k1, "k2": self.k2}


@dataclass(frozen=True)
class Mode:
    """How the equivariant parameters are treated.

    antidiagonal: s2 = -s1; s1 symbolic when ``s1`` is None, else a number.
    full:         independent numeric s1, s2.
    ktheory:      t1 = r^2, t2 = r^-2, i.e. t1^(1/2) = r.
    """
    kind: str = ANTIDIAGONAL
    s1: Fraction | None = None
    s2: Fraction | None = None
    r: Fraction | None = None
    seed: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown mode {self.kind!r}")
        for name in ("s1", "s2", "r"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, Fraction(v))
        if self.kind == FULL and (self.s1 is None or self.s2 is None):
            raise ValueError("full mode needs numeric s1 and s2")
        if self.kind == FULL and (self.s1 == 0 or self.s2 == 0 or self.s1 + self.s2 == 0):
            raise ValueError("full mode needs s1, s2 and s1 + s2 nonzero")
        if self.kind == KTHEORY and (self.r is None or abs(self.r) in (0, 1)):
            raise ValueError("ktheory mode needs r with r != 0, +-1")
        if self.kind == ANTIDIAGONAL and self.s1 == 0:
            raise ValueError("s1 must be nonzero")

    @property
    def symbolic(self) -> bool:
        return self.kind == ANTIDIAGONAL and self.s1 is None

    @property
    def cohomological(self) -> bool:
        return self.kind != KTHEORY

    # -- field elements --------------------------------------------------------
    def one(self):
        return Laurent.constant(1) if self.symbolic else Fraction(1)

    def s1_power(self, c, e: int):
        """c * s1^e in the mode's field (antidiagonal or ktheory only)."""
        if self.symbolic:
            return Laurent.monomial(c, e)
        if self.kind == ANTIDIAGONAL:
            return Fraction(c) * self.s1 ** e
        raise ValueError(f"s1 powers are not defined in {self.kind} mode")

    def bracket(self, m: int) -> Fraction:
        """t1^(m/2) - t1^(-m/2) at t1^(1/2) = r."""
        return self.r ** m - self.r ** (-m)

    def point(self) -> dict:
        """Values of (s1, s2) used when s3 is kept as the summation variable."""
        if self.kind == FULL:
            return {0: self.s1, 1: self.s2}
        if self.symbolic:
            return {0: Fraction(1)}
        return {0: self.s1}

    def evaluate_euler(self, f: FactoredRational):
        """Value of an Euler class with no s3 dependence."""
        if self.kind == FULL:
            return f.evaluate((self.s1, self.s2, 0))
        if self.kind == KTHEORY:
            raise ValueError("use evaluate_bracket in ktheory mode")
        g = f.restrict_antidiagonal(strict=False)
        if g.is_zero():
            return self.one() * 0
        if any(form[2] for form in g.factors):
            raise ValueError("class still depends on s3")
        if self.symbolic:
            return Laurent.monomial(g.evaluate((1, -1, 0)), g.degree())
        return g.evaluate((self.s1, -self.s1, 0))

    def evaluate_bracket(self, b: BracketProduct) -> Fraction:
        rb = b.restrict_antidiagonal(strict=False)
        if rb.is_zero():
            return Fraction(0)
        return rb.evaluate(self.r, 1 / self.r, 1)

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == ANTIDIAGONAL:
            out["s1"] = "symbolic" if self.s1 is None else str(self.s1)
            out["s2"] = "-s1"
        elif self.kind == FULL:
            out["s1"], out["s2"] = str(self.s1), str(self.s2)
        else:
            out["t1_half"] = str(self.r)
            out["t2_half"] = str(1 / self.r)
        return out

    def __str__(self):
        return ", ".join(f"{k}={v}" for k, v in self.to_json().items())


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {raw!r}") from None


def _random_rational(rng: random.Random, bound: int = 997) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if x and abs(x) != 1:
            return x


def sample_modes(kind: str, count: int, seed: int | None = None) -> list[Mode]:
    """``count`` random numeric modes drawn from a seeded generator."""
    seed = default_seed() if seed is None else seed
    rng = random.Random(f"{kind}:{seed}")
    out = []
    while len(out) < count:
        if kind == ANTIDIAGONAL:
            out.append(Mode(ANTIDIAGONAL, s1=_random_rational(rng), seed=seed))
        elif kind == FULL:
            s1, s2 = _random_rational(rng), _random_rational(rng)
            if s1 + s2 == 0 or s1 == s2:
                continue
            out.append(Mode(FULL, s1=s1, s2=s2, seed=seed))
        elif kind == KTHEORY:
            out.append(Mode(KTHEORY, r=_random_rational(rng, 9), seed=seed))
        else:
            raise ValueError(f"unknown mode {kind!r}")
    return out


SYMBOLIC = Mode(ANTIDIAGONAL)
