"""Exact arithmetic: Laurent coefficients, truncated series, factored rationals."""
from .brackets import BracketProduct
from .factored import FactoredRational, normalize_form, restrict_antidiagonal
from .laurent import Laurent
from .series import TruncatedSeries, hook_factor
from .univariate import (UniTerm, UnivariatePolyFraction, sum_and_specialize,
                         sum_terms_at)


def series_pow(s: TruncatedSeries, k: int) -> TruncatedSeries:
    return s ** k


def series_sqrt(s: TruncatedSeries, leading_root) -> TruncatedSeries:
    return s.sqrt(leading_root)


__all__ = [
    "BracketProduct", "FactoredRational", "Laurent", "TruncatedSeries",
    "UniTerm", "UnivariatePolyFraction", "hook_factor", "normalize_form",
    "restrict_antidiagonal", "series_pow", "series_sqrt", "sum_and_specialize",
    "sum_terms_at",
]
