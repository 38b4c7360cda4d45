"""Command-line front end.

Every verb takes a group spec in the constructor mini-language (see
``specparse``) and prints a JSON object (default) or CSV rows (``--csv``).
Rationals are rendered exactly as ``num/den`` strings; spectra are sorted
arrays of ``{"m": ..., "c": ...}``; key order is deterministic.

Exit codes: 0 success, 1 bad input (spec, parameters, non-spectral data),
2 resource cap exceeded, 3 internal cross-check failure (a bug), 4
verification-suite failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import groups
from .counting import commuting_probability, hom_count, kappa
from .errors import (CommhierError, InternalInconsistency, InvalidSpec,
                     OrderCap)
from .lattice import LATTICE_CAP, AbelianPoset, abelian_stats
from .spectrum import (eval_pr, eval_series, inverse_spectrum,
                       recurrence_from_spectrum, series_report,
                       spectrum_from_moebius)
from .specparse import make_group, parse_spec
from .verify import ALL_CHECKS, verify_corpus

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_INTERNAL = 3
EXIT_VERIFY = 4


def _frac(value) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def _spectrum_payload(spec) -> list[dict]:
    return [{"m": m, "c": c} for m, c in spec.entries]


def _lattice_cap(args) -> int:
    if args.lattice_cap is not None:
        return args.lattice_cap
    env = os.environ.get("COMMHIER_LATTICE_CAP")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidSpec(
                f"COMMHIER_LATTICE_CAP must be an integer, got {env!r}")
    return LATTICE_CAP


def _build(args):
    spec = parse_spec(args.spec)
    return spec, make_group(spec)


def _emit(payload: dict, args) -> None:
    if getattr(args, "csv", False):
        writer = csv.writer(sys.stdout)
        for key, value in payload.items():
            if key == "spectrum":
                writer.writerow(["m", "c"])
                for entry in value:
                    writer.writerow([entry["m"], entry["c"]])
            elif isinstance(value, (list, tuple)):
                writer.writerow([key] + list(value))
            else:
                writer.writerow([key, value])
    else:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")


def _emit_plot(prefix: str, G, spec, max_r: int) -> None:
    """Write plot-ready CSV tables: the hierarchy (r, P_r) and the
    spectrum (m, c_m)."""
    with open(f"{prefix}-hierarchy.csv", "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["r", "p_r"])
        for r in range(1, max_r + 1):
            writer.writerow([r, _frac(commuting_probability(G, r))])
    with open(f"{prefix}-spectrum.csv", "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["m", "c"])
        for m, c in spec.entries:
            writer.writerow([m, c])


# --- verbs -----------------------------------------------------------------

def cmd_count(args) -> int:
    spec, G = _build(args)
    _emit({"group": str(spec), "order": G.order, "r": args.r,
           "hom_count": hom_count(G, args.r)}, args)
    return EXIT_OK


def cmd_prob(args) -> int:
    spec, G = _build(args)
    _emit({"group": str(spec), "order": G.order, "r": args.r,
           "p_r": _frac(commuting_probability(G, args.r))}, args)
    return EXIT_OK


def cmd_kappa(args) -> int:
    spec, G = _build(args)
    _emit({"group": str(spec), "order": G.order, "r": args.r,
           "kappa_r": kappa(G, args.r)}, args)
    return EXIT_OK


def cmd_stats(args) -> int:
    spec, G = _build(args)
    poset = AbelianPoset(G, cap=_lattice_cap(args))
    stats = abelian_stats(poset)
    _emit({"group": str(spec), "order": G.order,
           "abelian": G.is_abelian(),
           "abelian_subgroups": len(poset),
           "m": stats.m, "n_max": stats.n_max, "b": stats.b,
           "maximal_abelian": stats.m_count,
           "center_order": G.center().order}, args)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    spec, G = _build(args)
    poset = AbelianPoset(G, cap=_lattice_cap(args))
    spectrum = spectrum_from_moebius(G, poset)
    _emit({"group": str(spec), "order": G.order,
           "spectrum": _spectrum_payload(spectrum)}, args)
    if args.emit_plot:
        _emit_plot(args.emit_plot, G, spectrum, args.plot_max_r)
    return EXIT_OK


def cmd_series(args) -> int:
    spec, G = _build(args)
    if G.is_abelian():
        # P_r = 1 for every r, so the series is geometric: z/(1-z) from r=1,
        # i.e. the closed form 1/(1-z) counting the constant term.
        payload = {"group": str(spec), "order": G.order,
                   "series": "1/(1-z)", "abelian": True}
        if args.z is not None:
            z = Fraction(args.z)
            if z == 1:
                payload["value"] = "pole"
            else:
                payload["value"] = _frac(1 / (1 - z))
        _emit(payload, args)
        return EXIT_OK
    poset = AbelianPoset(G, cap=_lattice_cap(args))
    spectrum = spectrum_from_moebius(G, poset)
    report = series_report(spectrum, abelian_stats(poset))
    payload = {
        "group": str(spec), "order": G.order,
        "spectrum": _spectrum_payload(spectrum),
        "first_pole": report.m_star,
        "pole_coefficient": _frac(report.pole_coefficient),
        "sigma_value": _frac(report.sigma_value),
        "alt_value": _frac(report.alt_value),
        "dirichlet_value": report.dirichlet_value,
    }
    if args.z is not None:
        payload["z"] = args.z
        payload["value"] = _frac(eval_series(spectrum, Fraction(args.z)))
    _emit(payload, args)
    if args.emit_plot:
        _emit_plot(args.emit_plot, G, spectrum, args.plot_max_r)
    return EXIT_OK


def cmd_recurrence(args) -> int:
    spec, G = _build(args)
    poset = AbelianPoset(G, cap=_lattice_cap(args))
    spectrum = spectrum_from_moebius(G, poset)
    sigma = recurrence_from_spectrum(spectrum)
    _emit({"group": str(spec), "order": G.order,
           "recurrence_order": spectrum.size,
           "sigma": [_frac(s) for s in sigma],
           "hankel_rank": spectrum.size}, args)
    return EXIT_OK


def cmd_invert(args) -> int:
    if args.values:
        raw = args.values
    else:
        raw = sys.stdin.read().replace(",", " ").split()
    if not raw:
        raise InvalidSpec("no values supplied (arguments or stdin)")
    values = [Fraction(v) for v in raw]
    spectrum = inverse_spectrum(values)
    _emit({"values": [_frac(v) for v in values],
           "spectrum": _spectrum_payload(spectrum),
           "reproduced": [_frac(eval_pr(spectrum, r))
                          for r in range(2, 2 + len(values))]}, args)
    return EXIT_OK


def cmd_report(args) -> int:
    spec, G = _build(args)
    poset = AbelianPoset(G, cap=_lattice_cap(args))
    stats = abelian_stats(poset)
    spectrum = spectrum_from_moebius(G, poset)
    report = series_report(spectrum, stats)
    _emit({
        "group": str(spec), "order": G.order,
        "abelian_subgroups": len(poset),
        "m": stats.m, "n_max": stats.n_max, "b": stats.b,
        "maximal_abelian": stats.m_count,
        "spectrum": _spectrum_payload(spectrum),
        "first_pole": report.m_star,
        "pole_coefficient": _frac(report.pole_coefficient),
        "sigma_value": _frac(report.sigma_value),
        "alt_value": _frac(report.alt_value),
        "dirichlet_value": report.dirichlet_value,
        "recurrence_order": spectrum.size,
        "sigma": [_frac(s) for s in report.recurrence],
        "hankel_rank": report.hankel_rank,
        "growth_rate_prob": _frac(report.lambda_prob),
        "growth_rate_orb": report.lambda_orb,
        "entropy_prob": report.h_prob,
        "entropy_orb": report.h_orb,
    }, args)
    if args.emit_plot:
        _emit_plot(args.emit_plot, G, spectrum, args.plot_max_r)
    return EXIT_OK


def cmd_verify(args) -> int:
    checks = args.check or None
    report = verify_corpus(checks=checks, max_r=args.max_r)
    records = [{
        "check": r.check, "group": r.group, "params": r.params,
        "passed": r.passed, "expected_pass": r.expected_pass,
        "detail": r.detail,
    } for r in report.records]
    _emit({"ok": report.ok,
           "records": len(records),
           "failures": [r for r in records
                        if r["passed"] != r["expected_pass"]],
           "expected_failures": [r for r in records
                                 if not r["expected_pass"]],
           "results": records}, args)
    return EXIT_OK if report.ok else EXIT_VERIFY


# --- argument parsing ------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="commhier",
        description="Exact commuting-tuple hierarchy toolkit for small "
                    "finite groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true",
                        help="emit CSV rows instead of JSON")
    common.add_argument("--lattice-cap", type=int, default=None,
                        help="max group order for subgroup enumeration "
                             "(default: env COMMHIER_LATTICE_CAP or "
                             f"{LATTICE_CAP})")
    common.add_argument("--assoc-seed", type=int, default=None,
                        help="seed for the sampled associativity check on "
                             "large tables (default 0)")

    spec_arg = argparse.ArgumentParser(add_help=False)
    spec_arg.add_argument("spec", help="group spec, e.g. 'symmetric(3)' or "
                          "'semidirect(cyclic(7); cyclic(3); [[2]])'")

    rank_arg = argparse.ArgumentParser(add_help=False)
    rank_arg.add_argument("-r", type=int, required=True, metavar="R",
                          help="tuple length / hierarchy level")

    plot_arg = argparse.ArgumentParser(add_help=False)
    plot_arg.add_argument("--emit-plot", metavar="PREFIX",
                          help="write PREFIX-hierarchy.csv (r, P_r) and "
                               "PREFIX-spectrum.csv (m, c_m)")
    plot_arg.add_argument("--plot-max-r", type=int, default=12,
                          help="largest r in the hierarchy table")

    sub = parser.add_subparsers(dest="verb", required=True)
    sub.add_parser("count", parents=[common, spec_arg, rank_arg],
                   help="commuting r-tuple count").set_defaults(func=cmd_count)
    sub.add_parser("prob", parents=[common, spec_arg, rank_arg],
                   help="exact P_r").set_defaults(func=cmd_prob)
    sub.add_parser("kappa", parents=[common, spec_arg, rank_arg],
                   help="conjugation orbit count").set_defaults(func=cmd_kappa)
    sub.add_parser("stats", parents=[common, spec_arg],
                   help="abelian subgroup statistics"
                   ).set_defaults(func=cmd_stats)
    sub.add_parser("spectrum", parents=[common, spec_arg, plot_arg],
                   help="finite Dirichlet spectrum"
                   ).set_defaults(func=cmd_spectrum)
    series = sub.add_parser("series", parents=[common, spec_arg, plot_arg],
                            help="generating series and special values")
    series.add_argument("--z", help="evaluate the series at a rational z")
    series.set_defaults(func=cmd_series)
    sub.add_parser("recurrence", parents=[common, spec_arg],
                   help="minimal recurrence coefficients"
                   ).set_defaults(func=cmd_recurrence)
    invert = sub.add_parser("invert", parents=[common],
                            help="recover a spectrum from exact P_2, P_3, ...")
    invert.add_argument("values", nargs="*",
                        help="rational values (or read from stdin)")
    invert.set_defaults(func=cmd_invert)
    sub.add_parser("report", parents=[common, spec_arg, plot_arg],
                   help="full exact summary").set_defaults(func=cmd_report)
    verify = sub.add_parser("verify", parents=[common],
                            help="run the built-in verification corpus")
    verify.add_argument("--check", action="append", choices=sorted(ALL_CHECKS),
                        help="run only the named check (repeatable)")
    verify.add_argument("--max-r", type=int, default=12,
                        help="hierarchy depth for the spectral identity check")
    verify.set_defaults(func=cmd_verify)
    return parser


def _error_payload(code: str, exc: Exception) -> dict:
    payload = {"error": type(exc).__name__, "code": code, "detail": str(exc)}
    position = getattr(exc, "position", None)
    if position is not None:
        payload["position"] = position
    return payload


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "assoc_seed", None) is not None:
        groups.DEFAULT_ASSOC_SEED = args.assoc_seed
    try:
        return args.func(args)
    except OrderCap as exc:
        json.dump(_error_payload("cap-exceeded", exc), sys.stderr)
        sys.stderr.write("\n")
        return EXIT_CAP
    except InternalInconsistency as exc:
        json.dump(_error_payload("internal-inconsistency", exc), sys.stderr)
        sys.stderr.write("\n")
        return EXIT_INTERNAL
    except (CommhierError, ValueError, ZeroDivisionError) as exc:
        json.dump(_error_payload("bad-input", exc), sys.stderr)
        sys.stderr.write("\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
