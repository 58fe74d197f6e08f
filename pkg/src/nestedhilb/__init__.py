"""Stable pair invariants of local curves via double nested Hilbert schemes of points."""
from .combinatorics import (Partition, ReversedPlanePartition, enumerate_partitions,
                            enumerate_rpps, hook_product_series, rpp_count_series)
from .invariants import (ANTIDIAGONAL, FULL, KTHEORY, SYMBOLIC, CheckResult, LocalCurveGeometry,
                         Mode, conifold_check, euler_series, gw_pt_check, gw_series,
                         leading_term, pt_integral, pt_series_d, universal_series_closed,
                         universal_series_extract)

__version__ = "0.1.0"

__all__ = [
    "ANTIDIAGONAL", "CheckResult", "FULL", "KTHEORY", "LocalCurveGeometry", "Mode",
    "Partition", "ReversedPlanePartition", "SYMBOLIC", "conifold_check", "enumerate_partitions",
    "enumerate_rpps", "euler_series", "gw_pt_check", "gw_series", "hook_product_series",
    "leading_term", "pt_integral", "pt_series_d", "rpp_count_series",
    "universal_series_closed", "universal_series_extract",
]
