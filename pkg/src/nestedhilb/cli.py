"""Command line front end.

Every command prints one JSON record (schema in ``records.SCHEMA``).  Exit
status is 0 when all checks pass, 1 when a check fails and 2 on invalid
input.
"""
from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .combinatorics import Partition, enumerate_partitions, enumerate_rpps, f_lambda_g
from .invariants.appendix import appendix_suite
from .invariants.integrals import CheckResult, leading_term, pt_local_series
from .invariants.modes import (ANTIDIAGONAL, FULL, KTHEORY, SYMBOLIC, LocalCurveGeometry, Mode,
                               default_seed, sample_modes)
from .invariants.records import dumps, make_record
from .invariants.series import (conifold_check, euler_series, gw_pt_check, pt_series_d)
from .invariants.suites import criteria, run_criterion
from .invariants.universal import universal_series_closed, universal_series_extract
from .localization import fixed_points
from .algebra.series import TruncatedSeries

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    args: dict
    mode_flag: str = ANTIDIAGONAL
    seed: int = 0
    out: str | None = None
    extra: dict = field(default_factory=dict)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}") from None


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None


def _mode(cfg: RunConfig, args) -> Mode:
    if cfg.mode_flag == ANTIDIAGONAL:
        return SYMBOLIC
    if cfg.mode_flag == FULL:
        if args.s1 is not None and args.s2 is not None:
            return Mode(FULL, s1=args.s1, s2=args.s2, seed=cfg.seed)
        return sample_modes(FULL, 1, cfg.seed)[0]
    if args.t1_half is not None:
        return Mode(KTHEORY, r=args.t1_half, seed=cfg.seed)
    return sample_modes(KTHEORY, 1, cfg.seed)[0]


# ---------------------------------------------------------------------------
# commands


def cmd_euler_series(cfg, args):
    lam, g, N = args.lam, args.g, args.N
    series = euler_series(lam, g, N)
    checks = []
    if g == 0:
        counts = {n: Fraction(sum(len(fixed_points(x)) for x in enumerate_rpps(lam, n)))
                  for n in range(N + 1)}
        k = series.first_mismatch(TruncatedSeries.from_dict(counts, N + 1))
        checks.append(CheckResult("fixed_point_count", k is None,
                                  {} if k is None else {"first_mismatch": k}))
    return make_record("euler-series", {"lambda": str(lam), "g": g, "N": N}, None, cfg.seed,
                       series=series, checks=checks)


def _localised_pt(d, geom, N, mode):
    """sum over l |- d of q^f times the P^1 localisation series, N orders past min f."""
    fs = {lam: f_lambda_g(lam, geom.g, geom.k1, geom.k2) for lam in enumerate_partitions(d)}
    prec = min(fs.values()) + N + 1
    total = TruncatedSeries.from_dict({}, prec)
    for lam, f in fs.items():
        if prec - f > 0:
            total = total + pt_local_series(lam, geom, prec - f - 1, mode).shift(f)
    return total


def cmd_pt_series(cfg, args):
    geom = LocalCurveGeometry(args.g, args.k1, args.k2)
    mode = _mode(cfg, args)
    series = pt_series_d(args.d, geom, args.N, mode)
    checks = []
    if mode.kind == ANTIDIAGONAL:
        k = series.first_mismatch(pt_series_d(args.d, geom, args.N, mode, route="display"))
        checks.append(CheckResult("display_formula", k is None,
                                  {} if k is None else {"first_mismatch": k}))
    if geom.g == 0 and not args.no_localisation:
        k = series.first_mismatch(_localised_pt(args.d, geom, args.N, mode))
        checks.append(CheckResult("localisation", k is None,
                                  {} if k is None else {"first_mismatch": k}))
    inputs = {"d": args.d, **geom.to_json(), "N": args.N}
    return make_record("pt-series", inputs, mode, cfg.seed, series=series, checks=checks)


def cmd_universal(cfg, args):
    mode = _mode(cfg, args)
    lam, N = args.lam, args.N
    inputs = {"lambda": str(lam), "N": N, "route": args.route}
    checks, value = [], None
    if args.route == "extract":
        value = universal_series_extract(lam, N, mode)
    elif args.route == "closed":
        value = universal_series_closed(lam, N, mode)
    else:
        value = universal_series_extract(lam, N, mode)
        mism = value.first_mismatch(universal_series_closed(lam, N, mode))
        checks.append(CheckResult("extract_vs_closed", mism is None, {} if mism is None else
                                  {"series": mism[0], "first_mismatch": mism[1]}))
    return make_record("universal", inputs, mode, cfg.seed, value=value, checks=checks)


def cmd_leading(cfg, args):
    geom = LocalCurveGeometry(args.g, args.k1, args.k2)
    euler, closed = leading_term(args.lam, geom, SYMBOLIC)
    check = CheckResult("euler_vs_closed", euler == closed,
                        {"euler_route": str(euler), "closed_route": str(closed)})
    return make_record("leading", {"lambda": str(args.lam), **geom.to_json()}, SYMBOLIC,
                       cfg.seed, value=euler, checks=[check])


def cmd_gw_pt(cfg, args):
    geom = LocalCurveGeometry(args.g, args.k1, args.k2)
    try:
        res = gw_pt_check(args.d, geom, args.N)
    except ArithmeticError as exc:
        res = CheckResult("gw_pt", False, {"error": str(exc)})
    return make_record("gw-pt", {"d": args.d, **geom.to_json(), "window": args.N}, SYMBOLIC,
                       cfg.seed, checks=[res])


def cmd_conifold(cfg, args):
    res = conifold_check(args.Dmax, args.N)
    return make_record("conifold", {"Dmax": args.Dmax, "N": args.N}, SYMBOLIC, cfg.seed,
                       checks=[res])


def cmd_check_appendix(cfg, args):
    res = appendix_suite(args.sizemax)
    return make_record("check-appendix", {"size_max": args.sizemax}, None, cfg.seed,
                       checks=[res])


def cmd_check_all(cfg, args):
    checks = []
    for num, title, _, budget in criteria(args.quick, cfg.seed):
        t0 = time.perf_counter()
        res, _ = run_criterion(num, args.quick, cfg.seed)
        elapsed = time.perf_counter() - t0
        flag = "PASS" if res.passed else "FAIL"
        print(f"[{flag}] {num:2d} {title} ({elapsed:.2f}s, budget {budget}s)", file=sys.stderr)
        checks.append(res)
    return make_record("check-all", {"quick": args.quick}, None, cfg.seed, checks=checks)


COMMANDS = {
    "euler-series": cmd_euler_series,
    "pt-series": cmd_pt_series,
    "universal": cmd_universal,
    "leading": cmd_leading,
    "gw-pt": cmd_gw_pt,
    "conifold": cmd_conifold,
    "check-appendix": cmd_check_appendix,
    "check-all": cmd_check_all,
}


# ---------------------------------------------------------------------------
# parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _mode_flags(p):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--antidiagonal", dest="mode_flag", action="store_const", const=ANTIDIAGONAL,
                   help="s2 = -s1 with s1 symbolic (default)")
    g.add_argument("--full", dest="mode_flag", action="store_const", const=FULL,
                   help="independent rational s1, s2 (degree one only)")
    g.add_argument("--k", dest="mode_flag", action="store_const", const=KTHEORY,
                   help="K-theoretic, t1 t2 = 1")
    p.add_argument("--s1", type=_fraction, help="s1 for --full (default: seeded sample)")
    p.add_argument("--s2", type=_fraction, help="s2 for --full (default: seeded sample)")
    p.add_argument("--t1-half", type=_fraction, help="t1^(1/2) for --k (default: seeded sample)")
    p.set_defaults(mode_flag=ANTIDIAGONAL)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="random seed (default: $NESTEDHILB_SEED or a fixed value)")
    common.add_argument("--out", help="write the JSON record here instead of stdout")

    p = _Parser(prog="nestedhilb", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("euler-series", parents=[common], help="prod (1-q^h)^(2g-2)")
    s.add_argument("lam", type=_partition)
    s.add_argument("g", type=_nonneg)
    s.add_argument("N", type=_nonneg)

    s = sub.add_parser("pt-series", parents=[common], help="PT_d(X; q) of a local curve")
    s.add_argument("d", type=_positive)
    s.add_argument("g", type=_nonneg)
    s.add_argument("k1", type=int)
    s.add_argument("k2", type=int)
    s.add_argument("N", type=_nonneg)
    s.add_argument("--no-localisation", action="store_true",
                   help="skip the P^1 localisation cross-check when g = 0")
    _mode_flags(s)

    s = sub.add_parser("universal", parents=[common], help="universal series A, B, C")
    s.add_argument("lam", type=_partition)
    s.add_argument("N", type=_nonneg)
    r = s.add_mutually_exclusive_group()
    r.add_argument("--extract", dest="route", action="store_const", const="extract")
    r.add_argument("--closed", dest="route", action="store_const", const="closed")
    r.add_argument("--compare", dest="route", action="store_const", const="compare")
    s.set_defaults(route="compare")
    _mode_flags(s)

    s = sub.add_parser("leading", parents=[common], help="size-zero leading term")
    s.add_argument("lam", type=_partition)
    s.add_argument("g", type=_nonneg)
    s.add_argument("k1", type=int)
    s.add_argument("k2", type=int)

    s = sub.add_parser("gw-pt", parents=[common], help="GW/PT correspondence over a window")
    s.add_argument("d", type=_positive)
    s.add_argument("g", type=_nonneg)
    s.add_argument("k1", type=int)
    s.add_argument("k2", type=int)
    s.add_argument("N", type=_positive, help="window width")

    s = sub.add_parser("conifold", parents=[common], help="resolved conifold product formula")
    s.add_argument("Dmax", type=_nonneg)
    s.add_argument("N", type=_nonneg)

    s = sub.add_parser("check-appendix", parents=[common], help="combinatorial identities")
    s.add_argument("sizemax", type=_nonneg)

    s = sub.add_parser("check-all", parents=[common], help="every verification suite")
    s.add_argument("--quick", action="store_true", help="reduced ranges")
    return p


def _validate(cfg: RunConfig, args):
    if cfg.command in ("universal",) and args.lam.size == 0:
        raise UsageError("universal series need a nonempty diagram")
    if cfg.command == "leading" and args.lam.size == 0:
        raise UsageError("the leading term needs a nonempty diagram")
    if cfg.mode_flag == FULL:
        if cfg.command == "pt-series" and args.d != 1:
            raise UsageError("--full is only available in degree 1")
        if cfg.command == "universal" and args.lam != Partition((1,)) and args.route != "extract":
            raise UsageError("--full closed forms exist only for lambda = (1)")
        if (args.s1 is None) != (args.s2 is None):
            raise UsageError("--s1 and --s2 go together")


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        seed = args.seed if args.seed is not None else default_seed()
        cfg = RunConfig(args.command, vars(args), getattr(args, "mode_flag", ANTIDIAGONAL),
                        seed, args.out)
        _validate(cfg, args)
        record = COMMANDS[args.command](cfg, args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, ZeroDivisionError) as exc:
        print(f"nestedhilb: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = dumps(record) + "\n"
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    ok = all(c["pass"] for c in record["checks"])
    if not ok:
        for c in record["checks"]:
            if not c["pass"]:
                print(f"nestedhilb: check {c['name']} failed: {c.get('detail')}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
