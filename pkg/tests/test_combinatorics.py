from fractions import Fraction
from itertools import product

import pytest
import sympy

from nestedhilb.combinatorics import (Partition, ReversedPlanePartition, conjugate,
                                      enumerate_fixed_points, enumerate_partitions,
                                      enumerate_rpps, f_lambda_g, graph_stats,
                                      hook_and_content, n_stat, partition_stats,
                                      rpp_count_series)
from nestedhilb.localization import fixed_points

P = Partition.parse

# number of partitions of n, n = 0..10
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def brute_rpps(lam, n):
    """All monotone fillings with entries <= n, filtered by size."""
    boxes = lam.boxes()
    out = []
    for vals in product(range(n + 1), repeat=len(boxes)):
        if sum(vals) != n:
            continue
        f = dict(zip(boxes, vals))
        if all(f[(i, j)] >= f.get((i - 1, j), 0) and f[(i, j)] >= f.get((i, j - 1), 0)
               for i, j in boxes):
            out.append(f)
    return out


def series_coeffs(expr, q, n):
    poly = sympy.series(expr, q, 0, n + 1).removeO()
    return [sympy.Rational(poly.coeff(q, k)) for k in range(n + 1)]


def test_enumerate_partitions_small():
    assert enumerate_partitions(0) == [Partition(())]
    assert enumerate_partitions(1) == [Partition((1,))]
    assert len(enumerate_partitions(4)) == 5


def test_enumerate_partitions_counts_and_order():
    for d, count in enumerate(PARTITION_COUNTS):
        parts = enumerate_partitions(d)
        assert len(parts) == count
        assert len(set(parts)) == count
        assert [p.parts for p in parts] == sorted((p.parts for p in parts), reverse=True)
        assert all(p.size == d for p in parts)


def test_conjugate():
    assert conjugate(P("3,2,2,1")) == P("4,3,1")
    assert conjugate(P("2,1")) == P("2,1")
    assert conjugate(P("")) == P("")
    for d in range(8):
        for lam in enumerate_partitions(d):
            assert lam.conjugate().conjugate() == lam


def test_hook_and_content():
    assert hook_and_content(P("2,1"), (0, 0)) == (3, 0)
    assert hook_and_content(P("2,1"), (0, 1)) == (1, 1)
    assert sorted(P("2,2").hooks()) == [1, 2, 2, 3]
    with pytest.raises(ValueError):
        hook_and_content(P("2,1"), (1, 1))


def test_partition_stats():
    assert partition_stats(P("2,1")) == (3, 1, 1, 0, 5)
    assert partition_stats(P("1")) == (1, 0, 0, 0, 1)
    assert partition_stats(P("3")) == (3, 0, 3, 3, 6)


def test_stat_identities_up_to_8():
    for d in range(9):
        for lam in enumerate_partitions(d):
            size, n, nbar, c, hsum = partition_stats(lam)
            assert hsum == n + nbar + size
            assert c == nbar - n
            assert c == sum(j - i for i, j in lam.boxes())
            assert n == sum(i * p for i, p in enumerate(lam.parts))


def test_graph_stats():
    g = graph_stats(P("3,2,2,1"))
    assert (g.V, g.E, g.Q) == (8, 9, 2)
    g = graph_stats(P("1"))
    assert (g.V, g.E, g.Q) == (1, 0, 0)
    g = graph_stats(P("2,2"))
    assert (g.V, g.E, g.Q) == (4, 4, 1)
    with pytest.raises(ValueError):
        graph_stats(P(""))


def test_enumerate_rpps_examples():
    assert [r.rows for r in enumerate_rpps(P("2"), 2)] == [((0, 2),), ((1, 1),)]
    assert len(enumerate_rpps(P("2,2"), 2)) == 3
    assert len(enumerate_rpps(P("1"), 7)) == 1
    with pytest.raises(ValueError):
        enumerate_rpps(P("1"), -1)


@pytest.mark.parametrize("lam", ["1", "2", "1,1", "2,1", "3", "2,2", "3,1", "2,1,1"])
def test_enumerate_rpps_matches_brute_force(lam):
    lam = P(lam)
    for n in range(6):
        got = sorted(tuple(sorted(r.entries().items())) for r in enumerate_rpps(lam, n))
        want = sorted(tuple(sorted(f.items())) for f in brute_rpps(lam, n))
        assert got == want


def test_rpp_count_series_examples():
    q = sympy.symbols("q")
    assert rpp_count_series(P("2,2"), 4).coeff(2) == 3
    assert rpp_count_series(P("1"), 6).coeffs == [1] * 7
    want = series_coeffs(1 / ((1 - q) ** 2 * (1 - q ** 3)), q, 8)
    got = rpp_count_series(P("2,1"), 8)
    assert [got.coeff(k) for k in range(9)] == want


def test_f_lambda_g():
    assert f_lambda_g(P("1"), 0, -1, -1) == 1
    for k1, k2 in [(0, 0), (1, -3), (2, 5)]:
        assert f_lambda_g(P("2,1"), 1, k1, k2) == -k1 - k2
    assert f_lambda_g(P(""), 0, 3, 4) == 0


def test_fixed_point_examples():
    assert [(a.rows, b.rows) for a, b in enumerate_fixed_points(ReversedPlanePartition.parse("2"))] \
        == [(((0,),), ((2,),)), (((1,),), ((1,),)), (((2,),), ((0,),))]
    for n in range(8):
        assert len(enumerate_fixed_points(ReversedPlanePartition.parse(str(n)))) == n + 1
    pairs = enumerate_fixed_points(ReversedPlanePartition.parse("0,1"))
    assert sorted((a.rows, b.rows) for a, b in pairs) == [(((0, 0),), ((0, 1),)),
                                                        (((0, 1),), ((0, 0),))]


def test_fixed_point_counts_match_hook_square():
    q = sympy.symbols("q")
    for d in range(1, 5):
        for lam in enumerate_partitions(d):
            expr = 1
            for h in lam.hooks():
                expr *= (1 - q ** h) ** -2
            want = series_coeffs(expr, q, 8 if d <= 3 else 6)
            for n, c in enumerate(want):
                assert sum(len(fixed_points(x)) for x in enumerate_rpps(lam, n)) == c


def test_rpp_parse_and_validation():
    r = ReversedPlanePartition.parse("0,1;2")
    assert r.shape == P("2,1") and r.size == 3
    with pytest.raises(ValueError):
        ReversedPlanePartition.parse("1,0")
    with pytest.raises(ValueError):
        Partition((1, 2))
    assert n_stat(P("1,1,1")) == 3
    assert Fraction(rpp_count_series(P("3"), 3).coeff(3)) == 3
