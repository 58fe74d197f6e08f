"""The thirteen acceptance criteria, each at its stated range and time budget."""
import time

import pytest

from nestedhilb.invariants.appendix import appendix_suite
from nestedhilb.invariants.suites import (conifold_suite, cy_suite, euler_suite,
                                          fixed_part_suite, full_degree_one_suite, graph_suite,
                                          gw_pt_suite, ktheory_suite, p1_identity_suite,
                                          rpp_hook_suite, trivial_bundle_suite, universal_suite)

CRITERIA = [
    (1, "RPP counts = hook product, |l| <= 5, n <= 12", 10,
     lambda: rpp_hook_suite(size_max=5, N=12)),
    (2, "V - E + Q - 1 = 0, |l| <= 10", 1,
     lambda: graph_suite(size_max=10)),
    (3, "appendix identities, |l| <= 8, k in [-3, 3]^2", 60,
     lambda: appendix_suite(8, range(-3, 4))),
    (4, "P^1 cohomology identities, a in [-4, 4], n0, ninf <= 5", 1,
     lambda: p1_identity_suite(range(-4, 5), n_max=5)),
    (5, "fixed part of E^dual = T^vir, |l| <= 3, |n| <= 3", 30,
     lambda: fixed_part_suite(size_max=3, n_max=3)),
    (6, "trivial bundle vanishing and n = 0 term, 3 samples + symbolic", 60,
     lambda: trivial_bundle_suite(size_max=3, n_max=4, samples=3, symbolic_size=2)),
    (7, "Calabi-Yau signs, counts and series mod q^5", 120,
     lambda: cy_suite(("1", "2", "1,1", "2,1"), n_max=4,
                      degrees=((-1, -1), (0, -2), (-2, 0)), N=4)),
    (8, "degree one full equivariant, 3 samples, mod q^6", 30,
     lambda: full_degree_one_suite(samples=3, N=5)),
    (9, "universal series extract = closed, |l| <= 3, mod q^8", 180,
     lambda: universal_suite(size_max=3, N=7)),
    (10, "GW/PT, d <= 3, g <= 2, window 8", 180,
     lambda: gw_pt_suite(d_max=3, genera=(0, 1, 2), window=8)),
    (11, "resolved conifold, Q-degree <= 3, q-order <= 10", 60,
     lambda: conifold_suite(Dmax=3, N=10)),
    (12, "K-theory closed forms mod q^4, 3 samples; bracket duality on 100 reps", 120,
     lambda: ktheory_suite(size_max=2, N=3, samples=3, reps=100)),
    (13, "PT Euler characteristics vs fixed-point counts, d <= 2, mod q^8", 60,
     lambda: euler_suite(d_max=2, degrees=((0, 0), (-1, -1)), N=7)),
]


@pytest.mark.parametrize("number,title,budget,thunk", CRITERIA,
                         ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, title, budget, thunk, capsys):
    t0 = time.perf_counter()
    res = thunk()
    elapsed = time.perf_counter() - t0
    ok = res.passed and elapsed < budget
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number:2d}: {title} "
              f"({elapsed:.2f}s < {budget}s)")
    assert res.passed, res.detail
    assert elapsed < budget, f"{elapsed:.1f}s over the {budget}s budget"


def test_parameter_coverage():
    """The suites report the ranges they actually ran."""
    assert appendix_suite(8).detail["partitions_tested"] == 67
    assert graph_suite(10).detail["partitions_tested"] == 138
    res = gw_pt_suite(3, (0, 1, 2), 8)
    assert res.detail["comparisons"] == 27
    assert len(conifold_suite(3, 10).detail["slices"]) == 4
