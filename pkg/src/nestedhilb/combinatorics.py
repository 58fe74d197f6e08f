"""Young diagrams, reversed plane partitions and their statistics.

Boxes are pairs (i, j) with row i and column j, both from 0, and
(i, j) lies in the diagram exactly when j < parts[i].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .algebra.series import TruncatedSeries, hook_factor


class Box(NamedTuple):
    i: int
    j: int


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "()", "0"):
            return cls(())
        return cls(tuple(int(x) for x in text.strip("()").split(",") if x.strip()))

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def boxes(self) -> list[Box]:
        """Row-major list of boxes."""
        return [Box(i, j) for i, p in enumerate(self.parts) for j in range(p)]

    def __contains__(self, box) -> bool:
        i, j = box
        return 0 <= i < len(self.parts) and 0 <= j < self.parts[i]

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > j)
                               for j in range(self.parts[0])))

    def hook(self, box) -> int:
        return hook_and_content(self, box)[0]

    def hooks(self) -> list[int]:
        return [self.hook(b) for b in self.boxes()]

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of d, lexicographically descending."""
    if d < 0:
        raise ValueError("d must be non-negative")

    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    return [Partition(p) for p in rec(d, d)]


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate()


def hook_and_content(lam: Partition, box) -> tuple[int, int]:
    i, j = box
    if (i, j) not in lam:
        raise ValueError(f"box {(i, j)} is not in {lam}")
    conj = lam.conjugate().parts
    return lam.parts[i] + conj[j] - i - j - 1, j - i


def n_stat(lam: Partition) -> int:
    """n(lambda) = sum of i * lambda_i."""
    return sum(i * p for i, p in enumerate(lam.parts))


def partition_stats(lam: Partition) -> tuple[int, int, int, int, int]:
    """(|lambda|, n(lambda), n(conjugate), c_lambda, sum of hooks)."""
    n = n_stat(lam)
    nbar = n_stat(lam.conjugate())
    return lam.size, n, nbar, sum(j - i for i, j in lam.boxes()), sum(lam.hooks())


@dataclass(frozen=True)
class GraphStats:
    V: int
    E: int
    Q: int

    def euler_relation(self) -> int:
        return self.V - self.E + self.Q - 1


def graph_stats(lam: Partition) -> GraphStats:
    if lam.size == 0:
        raise ValueError("graph of the empty diagram is undefined")
    boxes = set(lam.boxes())
    edges = sum(((i + 1, j) in boxes) + ((i, j + 1) in boxes) for i, j in boxes)
    squares = sum(1 for i, j in boxes
                  if {(i + 1, j), (i, j + 1), (i + 1, j + 1)} <= boxes)
    return GraphStats(len(boxes), edges, squares)


@dataclass(frozen=True)
class ReversedPlanePartition:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if tuple(len(r) for r in rows) != self.shape.parts:
            raise ValueError(f"row lengths {[len(r) for r in rows]} do not match {self.shape}")
        for i, r in enumerate(rows):
            for j, x in enumerate(r):
                if x < 0:
                    raise ValueError("entries must be non-negative")
                if j and r[j - 1] > x:
                    raise ValueError(f"row {i} decreases at column {j}")
                if i and rows[i - 1][j] > x:
                    raise ValueError(f"column {j} decreases at row {i}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def zero(cls, shape: Partition):
        return cls(shape, tuple((0,) * p for p in shape.parts))

    @classmethod
    def from_entries(cls, shape: Partition, entries: dict):
        return cls(shape, tuple(tuple(entries[(i, j)] for j in range(p))
                                for i, p in enumerate(shape.parts)))

    @classmethod
    def parse(cls, text: str) -> "ReversedPlanePartition":
        rows = [tuple(int(x) for x in r.split(",") if x.strip())
                for r in text.strip().split(";") if r.strip()]
        return cls(Partition(tuple(len(r) for r in rows)), tuple(rows))

    def __getitem__(self, box) -> int:
        i, j = box
        return self.rows[i][j]

    @property
    def size(self) -> int:
        return sum(map(sum, self.rows))

    def entries(self) -> dict:
        return {b: self[b] for b in self.shape.boxes()}

    def to_json(self) -> dict:
        return {"shape": list(self.shape.parts), "rows": [list(r) for r in self.rows]}

    def __str__(self):
        return ";".join(",".join(map(str, r)) for r in self.rows)


def _fillings(lam: Partition, lower, upper, total=None):
    """Monotone fillings with lower(box, partial) <= x <= upper(box, partial).

    Boxes are filled in row-major order, so left and upper neighbours are
    known.  ``total`` fixes the sum of all entries.
    """
    boxes = lam.boxes()
    n = len(boxes)
    vals: dict = {}

    def rec(k, rest):
        if k == n:
            if total is None or rest == 0:
                yield dict(vals)
            return
        b = boxes[k]
        lo = lower(b, vals)
        hi = upper(b, vals)
        if total is not None:
            # all later boxes in the same row and below are at least this entry
            hi = min(hi, rest // max(1, _shadow(lam, b)))
        for x in range(lo, hi + 1):
            vals[b] = x
            yield from rec(k + 1, rest - x if total is not None else 0)
        vals.pop(b, None)

    yield from rec(0, total if total is not None else 0)


def _shadow(lam: Partition, box) -> int:
    """Number of boxes weakly south-east of ``box`` (all forced >= its entry)."""
    i0, j0 = box
    return sum(max(0, p - j0) for p in lam.parts[i0:])


def _monotone_lower(b, vals):
    i, j = b
    return max(vals.get((i - 1, j), 0), vals.get((i, j - 1), 0))


def enumerate_rpps(lam: Partition, n: int) -> list[ReversedPlanePartition]:
    """All RPPs of shape lam and size n, in lexicographic order of row-major entries."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = [ReversedPlanePartition.from_entries(lam, f)
           for f in _fillings(lam, _monotone_lower, lambda b, v: n, n)]
    return out


def rpp_count_series(lam: Partition, N: int) -> TruncatedSeries:
    """Counting series of RPPs of shape lam, known mod q^(N+1)."""
    counts = {n: Fraction(len(enumerate_rpps(lam, n))) for n in range(N + 1)}
    return TruncatedSeries.from_dict(counts, N + 1)


def hook_product_series(lam: Partition, power: int, prec: int) -> TruncatedSeries:
    """prod over boxes of (1 - q^h)^power, known below q^prec."""
    out = TruncatedSeries.one(prec)
    for h in lam.hooks():
        out = out * hook_factor(h, power, prec)
    return out


def f_lambda_g(lam: Partition, g: int, k1: int, k2: int) -> int:
    """Sum over boxes of (1 - g - i*k1 - j*k2)."""
    box_sum = sum(1 - g - i * k1 - j * k2 for i, j in lam.boxes())
    closed = lam.size * (1 - g) - k1 * n_stat(lam) - k2 * n_stat(lam.conjugate())
    assert box_sum == closed
    return box_sum


def enumerate_fixed_points(n_lam: ReversedPlanePartition):
    """Splittings n = a + b with a and b both reversed plane partitions."""
    lam = n_lam.shape
    n = n_lam.entries()

    def upper(b, vals):
        i, j = b
        # b-part monotone: n[b] - a[b] >= n[up] - a[up], n[left] - a[left]
        hi = n[b]
        for nb in ((i - 1, j), (i, j - 1)):
            if nb in vals:
                hi = min(hi, n[b] - (n[nb] - vals[nb]))
        return hi

    out = []
    for a in _fillings(lam, _monotone_lower, upper):
        b = {box: n[box] - a[box] for box in a}
        out.append((ReversedPlanePartition.from_entries(lam, a),
                    ReversedPlanePartition.from_entries(lam, b)))
    return out
