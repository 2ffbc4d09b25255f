"""Command-line surface and machine-readable reporting.

Every subcommand emits self-describing records (input parameters,
verdicts, witnesses) with exact integers rendered as decimal strings, as
one JSON document or as one tab-separated record per line.  Exit code 0
means every checked property held; 1 flags a violated property with the
violating instance in the output; 2 is a usage error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

from . import discrim, galois, irred, qfield, roots
from .config import RunConfig, resolve_config
from .polyz import (
    IntPolynomial,
    binom_identity_check,
    build_f1n,
    build_g1n,
    build_mf1n,
    shift_by_one,
)


def _stringify(value):
    """Exact integers as decimal strings, recursively; no precision loss."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    if dataclasses.is_dataclass(value):
        return _stringify(dataclasses.asdict(value))
    return str(value)


def _emit(command: str, params: dict, records: list[dict], ok: bool, cfg: RunConfig) -> int:
    doc = {
        "command": command,
        "params": _stringify(params),
        "ok": ok,
        "records": [_stringify(r) for r in records],
    }
    if cfg.output_format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"# command={command}\tok={ok}")
        for rec in doc["records"]:
            print("\t".join(f"{k}={_tsv_cell(v)}" for k, v in rec.items()))
    return 0 if ok else 1


def _tsv_cell(value):
    if isinstance(value, (dict, list)):
        return json.dumps(value)
    return str(value)


def _cmd_roots(args, cfg: RunConfig) -> int:
    rep = roots.check_bounds_f1n(args.n, cfg.tol)
    rec = {
        "n": args.n,
        "degree": rep.degree,
        "min_modulus": rep.min_modulus,
        "max_modulus": rep.max_modulus,
        "lower": rep.lower,
        "upper": rep.upper,
        "eps_num": rep.eps_num,
        "max_unit_deviation": rep.max_unit_deviation,
        "bound_ok": rep.bound_ok,
    }
    return _emit("roots", {"n": args.n, "tol": cfg.tol}, [rec], rep.bound_ok, cfg)


def _cmd_bounds_fpn(args, cfg: RunConfig) -> int:
    rep = roots.check_bounds_fpN(args.p, args.N, cfg.tol)
    rec = {
        "p": args.p,
        "N": args.N,
        "degree": rep.degree,
        "bound_ok": rep.bound_ok,
        "vacuous": rep.vacuous,
        "lower": rep.lower,
        "upper": rep.upper,
    }
    if not rep.vacuous:
        rec["min_modulus"] = rep.min_modulus
        rec["max_modulus"] = rep.max_modulus
    return _emit("bounds-fpn", {"p": args.p, "N": args.N, "tol": cfg.tol}, [rec], rep.bound_ok, cfg)


def _scan_row_record(row: irred.ScanRow) -> dict:
    rec = {
        "n": row.n,
        "kind": row.kind,
        "verdict": row.verdict,
        "sieve_verdict": row.sieve_verdict,
        "witness_primes": list(row.witness_primes),
    }
    if row.m is not None:
        rec["m"] = row.m
    if row.applicable:
        rec["applicable"] = list(row.applicable)
    return rec


def _cmd_irreducible(args, cfg: RunConfig) -> int:
    row = irred.scan_one(args.n, args.m)
    ok = row.verdict == irred.VERDICT_IRREDUCIBLE
    return _emit("irreducible", {"n": args.n, "m": args.m}, [_scan_row_record(row)], ok, cfg)


def _scan_worker(task):
    n, m = task
    return irred.scan_one(n, m)


def _cmd_scan(args, cfg: RunConfig) -> int:
    lo, hi = cfg.scan_range
    lo = max(lo, 3 if args.m is not None else 2)
    tasks = [(n, args.m) for n in range(lo, hi + 1)]
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            rows = list(pool.map(_scan_worker, tasks, chunksize=8))
    else:
        rows = [_scan_worker(t) for t in tasks]
    ok = all(r.verdict == irred.VERDICT_IRREDUCIBLE for r in rows)
    return _emit(
        "scan",
        {"n_lo": lo, "n_hi": hi, "m": args.m, "threads": cfg.threads},
        [_scan_row_record(r) for r in rows],
        ok,
        cfg,
    )


def _cmd_disc(args, cfg: RunConfig) -> int:
    if args.m is None:
        f = build_f1n(args.n)
        rep = discrim.discriminant(f)
        closed = discrim.closed_form_disc_f1n(args.n)
        ok = rep.disc == closed
        rec = {
            "n": args.n,
            "disc": rep.disc,
            "closed_form": closed,
            "factorization": {str(p): e for p, e in sorted(rep.factorization.items())},
            "squarefree_part": rep.squarefree_part,
            "quad_field": rep.quad_field if rep.quad_field is not None else "none",
            "factor_complete": rep.factor_complete,
            "matches_closed_form": ok,
        }
        return _emit("disc", {"n": args.n}, [rec], ok, cfg)
    f = build_mf1n(args.m, args.n)
    rep = discrim.discriminant(f)
    ok = True
    rec = {
        "n": args.n,
        "m": args.m,
        "disc": rep.disc,
        "factorization": {str(p): e for p, e in sorted(rep.factorization.items())},
        "squarefree_part": rep.squarefree_part,
        "quad_field": rep.quad_field if rep.quad_field is not None else "none",
        "factor_complete": rep.factor_complete,
    }
    if args.n in (3, 4):
        closed = discrim.disc_mf1n_closed(args.m, args.n)
        ok = rep.disc == closed
        rec["closed_form"] = closed
        rec["matches_closed_form"] = ok
    return _emit("disc", {"n": args.n, "m": args.m}, [rec], ok, cfg)


def _cmd_subfield(args, cfg: RunConfig) -> int:
    radicand = discrim.quadratic_subfield(args.n)
    case_value = discrim.subfield_case_value(args.n)
    closed = discrim.closed_form_disc_f1n(args.n)
    ok = case_value == closed
    rec = {
        "n": args.n,
        "radicand": radicand,
        "degenerate": radicand == "degenerate",
        "disc": closed,
        "case_value_consistent": ok,
    }
    return _emit("subfield", {"n": args.n}, [rec], ok, cfg)


def _galois_record(v: galois.GaloisVerdict) -> dict:
    return {
        "n": v.n,
        "kind": v.kind,
        "group": v.group_name,
        "group_order": v.group_order,
        "degree": v.degree,
        "disc_is_square": v.disc_is_square,
        "transposition_prime": v.transposition_prime,
        "transposition_shape": list(v.transposition_shape) if v.transposition_shape else None,
        "long_cycle_prime": v.long_cycle_prime,
        "long_cycle_length": v.long_cycle_length,
        "used_prime_degree_rule": v.used_prime_degree_rule,
        "used_jordan_extension": v.used_jordan_extension,
        "usable_primes": v.usable_primes,
        "fit": {k: {kk: vv for kk, vv in s.items()} for k, s in v.fit.items()},
        "note": v.note,
    }


def _cmd_galois(args, cfg: RunConfig) -> int:
    v = galois.classify_galois(args.n, window=cfg.prime_window)
    expected = galois.TABLE1_EXPECTED.get(args.n)
    ok = v.kind != galois.KIND_INCONCLUSIVE
    if expected is not None:
        ok = ok and v.group_name == expected
    rec = _galois_record(v)
    if expected is not None:
        rec["expected"] = expected
        rec["agree"] = v.group_name == expected
    return _emit("galois", {"n": args.n, "window": list(cfg.prime_window)}, [rec], ok, cfg)


def _table1_worker(task):
    n, window = task
    return galois.classify_galois(n, window=window)


def _cmd_verify_table1(args, cfg: RunConfig) -> int:
    ns = sorted(galois.TABLE1_EXPECTED)
    if cfg.threads > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            verdicts = list(pool.map(_table1_worker, [(n, cfg.prime_window) for n in ns]))
    else:
        verdicts = [_table1_worker((n, cfg.prime_window)) for n in ns]
    records = []
    ok = True
    for n, v in zip(ns, verdicts):
        agree = v.group_name == galois.TABLE1_EXPECTED[n]
        ok = ok and agree
        records.append(
            {
                "n": n,
                "expected": galois.TABLE1_EXPECTED[n],
                "computed": v.group_name,
                "kind": v.kind,
                "agree": agree,
                "usable_primes": v.usable_primes,
                "used_jordan_extension": v.used_jordan_extension,
            }
        )
    return _emit("verify-table1", {"window": list(cfg.prime_window)}, records, ok, cfg)


def _cmd_theta(args, cfg: RunConfig) -> int:
    nmax = args.nmax if args.nmax is not None else cfg.theta_nmax
    theta = qfield.theta_coefficients(nmax)
    ok = all(theta.integral)
    records = [{"n": n, "a": theta.coefficient(n)} for n in range(1, nmax + 1)]
    return _emit("theta", {"nmax": nmax}, records, ok, cfg)


def _cmd_thm51(args, cfg: RunConfig) -> int:
    rep = qfield.theorem51_equivalence(args.pmax)
    facts_xy = qfield.fact_xy_mod3(args.pmax)
    facts_cube = qfield.fact_cube_mod5(args.cube_bound)
    ok = not rep.violations and not facts_xy.violations and not facts_cube.violations
    rec = {
        "p_max": rep.p_max,
        "checked": rep.checked,
        "violations": [dict(v) for v in rep.violations],
        "xy_mod3_checked": facts_xy.checked,
        "xy_mod3_violations": list(facts_xy.violations),
        "cube_mod5_bound": facts_cube.bound,
        "cube_mod5_violations": list(facts_cube.violations),
    }
    return _emit("thm51", {"pmax": args.pmax, "cube_bound": args.cube_bound}, [rec], ok, cfg)


def _cmd_eta(args, cfg: RunConfig) -> int:
    rows = qfield.eta_product_mismatch(args.nmax)
    records = [
        {
            "a": r.a,
            "b": r.b,
            "first_mismatch_index": r.first_mismatch_index,
            "eta_coefficient": r.eta_coefficient,
            "theta_coefficient": r.theta_coefficient,
            "eq52_12p_solvable_primes": list(r.eq52_12p_solvable_primes),
            "eq52_24p_solvable_primes": list(r.eq52_24p_solvable_primes),
        }
        for r in rows
    ]
    ok = all(r.first_mismatch_index <= args.nmax for r in rows)
    return _emit("eta", {"nmax": args.nmax}, records, ok, cfg)


def _cmd_identity_check(args, cfg: RunConfig) -> int:
    """Product identity g = (x-1) f, the shifted-coefficient pattern, and
    the binomial identity behind it, over the configured scan range."""
    hi = cfg.scan_range[1]
    failures = []
    x_minus_1 = IntPolynomial([-1, 1])
    for n in range(2, hi + 1):
        if build_g1n(n) != x_minus_1 * build_f1n(n):
            failures.append({"identity": "product", "n": n})
        shifted = shift_by_one(build_f1n(n))
        if shifted[0] != n * (n + 1) // 2:
            failures.append({"identity": "shift-constant", "n": n})
        for k in range(1, n):
            if shifted[n - k] != math.comb(n + 1, k - 1):
                failures.append({"identity": "shift-coefficient", "n": n, "k": k})
                break
    for n in range(4, min(hi, 100) + 1):
        for k in range(2, n):
            if not binom_identity_check(n, k):
                failures.append({"identity": "binomial", "n": n, "k": k})
    ok = not failures
    rec = {"range_hi": hi, "violations": failures, "all_hold": ok}
    return _emit("identity-check", {"range_hi": hi}, [rec], ok, cfg)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nacf",
        description="Exact verification pipelines for the triangular polynomial families",
    )
    parser.add_argument("--config", help="config file path (or set NACF_CONFIG)")
    parser.add_argument("--format", choices=("json", "tsv"), help="output format")
    parser.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"), help="prime window")
    parser.add_argument("--scan", nargs=2, type=int, metavar=("LO", "HI"), help="scan range")
    parser.add_argument("--tol", type=float, help="root residual tolerance")
    parser.add_argument("--theta-nmax", type=int, dest="theta_nmax", help="theta series length")
    parser.add_argument("--threads", type=int, help="worker processes for sweeps")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("roots", help="root-modulus bound check for the triangular family")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("bounds-fpn", help="root-modulus bound check for a digit quotient")
    p.add_argument("p", type=int)
    p.add_argument("N", type=int)
    p.set_defaults(func=_cmd_bounds_fpn)

    p = sub.add_parser("irreducible", help="irreducibility verdict for one n")
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=_cmd_irreducible)

    p = sub.add_parser("scan", help="irreducibility scan over the configured range")
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("disc", help="exact discriminant report")
    p.add_argument("n", type=int)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(func=_cmd_disc)

    p = sub.add_parser("subfield", help="quadratic subfield radicand")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_subfield)

    p = sub.add_parser("galois", help="Galois group identification")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_galois)

    p = sub.add_parser("verify-table1", help="reproduce the group table for n = 4..22")
    p.set_defaults(func=_cmd_verify_table1)

    p = sub.add_parser("theta", help="theta series coefficients")
    p.add_argument("nmax", type=int, nargs="?", default=None)
    p.set_defaults(func=_cmd_theta)

    p = sub.add_parser("thm51", help="three-way split-prime equivalence check")
    p.add_argument("pmax", type=int)
    p.add_argument("--cube-bound", type=int, default=200, dest="cube_bound")
    p.set_defaults(func=_cmd_thm51)

    p = sub.add_parser("eta", help="eta-product mismatch search")
    p.add_argument("nmax", type=int)
    p.set_defaults(func=_cmd_eta)

    p = sub.add_parser("identity-check", help="coefficient identity sweep")
    p.set_defaults(func=_cmd_identity_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if not getattr(args, "command", None):
        parser.print_usage(sys.stderr)
        return 2
    try:
        cfg = resolve_config(args)
    except (ValueError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args, cfg)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
