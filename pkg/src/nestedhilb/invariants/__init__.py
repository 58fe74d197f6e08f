"""Integrals, generating series and verification suites for local curves."""
from .appendix import appendix_suite, g_poly, h_poly, hook_identity, sign_identity, tau_product
from .integrals import (CheckResult, cy_closed_series, cy_sign, cy_sign_check, leading_term,
                        leading_term_closed, leading_term_euler, pt_integral, pt_local_series)
from .ktheory import dual_bracket_check, ktheory_closed_check, ktheory_integral, ktheory_series
from .modes import (ANTIDIAGONAL, FULL, KTHEORY, SEED_ENV, SYMBOLIC, LocalCurveGeometry, Mode,
                    default_seed, sample_modes)
from .records import SCHEMA, dumps, make_record
from .series import (GWSeries, conifold_check, conifold_product, euler_series, gw_pt_check,
                     gw_series, pt_euler_count, pt_euler_series, pt_series_d, schur_principal)
from .suites import criteria, run_criterion
from .symbolic import symbolic_integral
from .universal import (UniversalSeriesTriple, f_lambda, universal_series_closed,
                        universal_series_extract)

__all__ = [
    "ANTIDIAGONAL", "CheckResult", "FULL", "GWSeries", "KTHEORY", "LocalCurveGeometry",
    "Mode", "SCHEMA", "SEED_ENV", "SYMBOLIC", "UniversalSeriesTriple", "appendix_suite",
    "conifold_check", "conifold_product", "criteria", "cy_closed_series", "cy_sign",
    "cy_sign_check", "default_seed", "dual_bracket_check", "dumps", "euler_series",
    "f_lambda", "g_poly", "gw_pt_check", "gw_series", "h_poly", "hook_identity",
    "ktheory_closed_check", "ktheory_integral", "ktheory_series", "leading_term",
    "leading_term_closed", "leading_term_euler", "make_record", "pt_euler_count",
    "pt_euler_series", "pt_integral", "pt_local_series", "pt_series_d", "run_criterion",
    "sample_modes", "schur_principal", "sign_identity", "symbolic_integral", "tau_product",
    "universal_series_closed", "universal_series_extract",
]
