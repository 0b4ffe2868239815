"""``fuchsia`` command-line driver.

Every command prints one JSON report.  Exit status is 0 when all checks
pass, 1 when a check fails or a computation is obstructed, 2 on usage
errors (unknown names, malformed parameters).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from . import catalog
from .difference import gauge_factor, invariant, displayed_recurrences, recurrence_names
from .errors import FuchsiaError, MissingParam, UnknownName, UnknownOperator
from .exact_algebra import rat, rat_to_json
from .families import MATCHES, expression_ids, family, family_names, hat_list
from .frobenius import recurrence_at, series, series_ok
from .hypergeometric import HypParams, f4t3_at1, rc0_hat, rc1_hat, terminating_4f3_at1
from .local_analysis import INF, compare_scheme, expected_scheme, local_exponents, scheme_names, singular_points
from .middle_convolution import mc
from .ore import ad_conjugate
from .params import DFParams, Params, parse_params
from .verify import CRITERIA, DEFAULT_SEED, Context, check_ids, get_check, run_check

CERTIFICATE_VERSION = 1
USAGE_ERRORS = (UnknownName, UnknownOperator, MissingParam)


class UsageError(Exception):
    pass


def _default_seed() -> int:
    env = os.environ.get("FUCHSIA_SEED")
    if env is None:
        return DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise UsageError(f"FUCHSIA_SEED must be an integer, got {env!r}") from None


def _point(text: str):
    return INF if text in ("inf", "oo", "infinity") else rat(text)


def _rats(text: str) -> list:
    return [rat(v) for v in text.split(",") if v.strip()]


def _params(args) -> dict:
    try:
        return parse_params(args.params)
    except (ValueError, ZeroDivisionError) as ex:
        raise UsageError(f"bad --params: {ex}") from None


DEFAULT_TRUNCATION = 40


def _op(args):
    return catalog.make(args.op, _params(args))


# --- commands ---------------------------------------------------------------------------------


def cmd_list(args) -> dict:
    return {
        "status": "pass",
        "operators": {n: {"params": list(catalog.signature(n)), "doc": catalog.describe(n)} for n in catalog.names()},
        "schemes": scheme_names(),
        "recurrences": recurrence_names(),
        "families": {n: expression_ids(n) for n in family_names()},
        "parameter_lists": [f"{rec}:{lst}" for rec, lst, _ in MATCHES],
        "checks": {i: get_check(i).doc for i in check_ids()},
        "criteria": {str(k): v for k, v in CRITERIA.items()},
    }


def cmd_make(args) -> dict:
    op = _op(args)
    return {"status": "pass", "operator": args.op, "params": _json_params(args), "text": op.to_str(), "coeffs": op.to_json()}


def cmd_scheme(args) -> dict:
    op = _op(args)
    values = _params(args)
    if args.op in scheme_names():
        res = compare_scheme(op, expected_scheme(args.op), values)
        ok = all(v["match"] for v in res.values())
        return {"status": "pass" if ok else "fail", "operator": args.op, "params": _json_params(args), "points": res}
    pts, rest = singular_points(op)
    out = {}
    for pt in [*pts, INF]:
        exps, residual = local_exponents(op, pt)
        out[str(pt)] = {"computed": [rat_to_json(e) for e in exps], "residual_degree": residual.degree}
    return {"status": "pass", "operator": args.op, "params": _json_params(args), "points": out, "tabulated": False}


def cmd_mc(args) -> dict:
    res = mc(_op(args), rat(args.mu))
    return {"status": "pass", "operator": args.op, "mu": args.mu, "text": res.to_str(), "coeffs": res.to_json()}


def cmd_ad(args) -> dict:
    factors = []
    for item in args.factors.split(","):
        if ":" not in item:
            raise UsageError(f"--factors expects point:exponent pairs, got {item!r}")
        c, lam = item.split(":", 1)
        factors.append((rat(c), rat(lam)))
    res, _ = ad_conjugate(_op(args), factors)
    res = res.normalize()
    return {"status": "pass", "operator": args.op, "factors": args.factors, "text": res.to_str(), "coeffs": res.to_json()}


def _family_params(f, values: dict):
    return DFParams.from_mapping(values) if f.kind == "DF" else Params.from_mapping(values)


def cmd_series(args) -> dict:
    values = _params(args)
    if args.n is None:
        args.n = DEFAULT_TRUNCATION
    if args.family:
        f = family(args.family)
        s = f.series(_family_params(f, values), args.n, args.expr)
        op = catalog.make(f.operator, values)
    else:
        if args.op is None or args.point is None or args.rho is None:
            raise UsageError("series needs --family or all of --op, --point, --rho")
        op = _op(args)
        s = series(op, _point(args.point), rat(args.rho), args.n)
    return {"status": "pass" if series_ok(op, s) else "fail", "n": args.n, "series": s.to_json()}


def cmd_recurrence(args) -> dict:
    if args.name:
        d = displayed_recurrences(args.name, Params.from_mapping(_params(args)))
        return {"status": "pass", "name": args.name, "recurrence": d.to_json()}
    if args.op is None or args.point is None or args.rho is None:
        raise UsageError("recurrence needs --name or all of --op, --point, --rho")
    rec = recurrence_at(_op(args), _point(args.point), rat(args.rho))
    return {"status": "pass", "recurrence": rec.to_json()}


def cmd_invariant(args) -> dict:
    d = displayed_recurrences(args.name, Params.from_mapping(_params(args)))
    h = invariant(d)
    out = {"status": "pass", "name": args.name, "invariant": h.to_json()}
    if args.at is not None:
        out["value"] = rat_to_json(h(rat(args.at)))
    return out


def cmd_gauge(args) -> dict:
    p = Params.from_mapping(_params(args))
    kinds = {lst: kind for _, lst, kind in MATCHES}
    if args.list not in kinds:
        raise UsageError(f"unknown parameter list {args.list!r}")
    h = hat_list(args.list, p)
    other = rc0_hat(h) if kinds[args.list] == "rc0" else rc1_hat(h)
    g = gauge_factor(displayed_recurrences(args.name, p), other)
    return {"status": "pass", "name": args.name, "list": args.list, "gauge": g.to_json()}


def cmd_4f3(args) -> dict:
    alphas, betas = _rats(args.alphas), _rats(args.betas)
    if len(alphas) != 4 or len(betas) != 3:
        raise UsageError("4f3 needs four --alphas and three --betas")
    h = HypParams(tuple(alphas), tuple(betas))
    if h.is_terminating():
        return {"status": "pass", "terminating": True, "value": rat_to_json(terminating_4f3_at1(h))}
    # Gamma-normalised sum, comparable across contiguous parameters
    value, err = f4t3_at1(list(alphas), [rat(1), *betas])
    return {"status": "pass", "terminating": False, "normalised_value": value, "error_estimate": err}


def _ctx(args) -> Context:
    return Context(seed=args.seed, draws=args.draws, n=args.n, tol=args.tol)


def _run_all(ids: Sequence[str], ctx: Context, jobs: int) -> list[dict]:
    ids = sorted(set(ids))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(run_check, ids, [ctx] * len(ids)))
    else:
        results = [run_check(i, ctx) for i in ids]
    return sorted(results, key=lambda r: r["id"])


def _checks_report(results: list[dict]) -> dict:
    ok = all(r["status"] == "pass" for r in results)
    return {
        "status": "pass" if ok else "fail",
        "summary": {r["id"]: r["status"] for r in results},
        "checks": results,
    }


def cmd_verify(args) -> dict:
    ids = list(args.ids)
    if args.criterion is not None:
        if args.criterion not in CRITERIA:
            raise UsageError(f"criterion must be 1..{len(CRITERIA)}")
        ids += check_ids(args.criterion)
    if not ids:
        raise UsageError("name at least one check id or pass --criterion")
    for i in ids:
        get_check(i)
    return _checks_report(_run_all(ids, _ctx(args), args.jobs))


def cmd_pfaffian(args) -> dict:
    ids = {"z3": ["pfaffian-z3", "pfaffian-spot"], "z2": ["pfaffian-z2"]}[args.system]
    return _checks_report(_run_all(ids, _ctx(args), args.jobs)) | {"system": args.system}


def cmd_repro_all(args) -> dict:
    results = _run_all(check_ids(), _ctx(args), args.jobs)
    report = _checks_report(results)
    report["criteria"] = {
        str(k): "pass" if all(r["status"] == "pass" for r in results if r["criterion"] == k) else "fail"
        for k in CRITERIA
    }
    return report


def _json_params(args) -> dict:
    return {k: rat_to_json(v) for k, v in sorted(_params(args).items())}


# --- parser -----------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", help="comma-separated key=value rationals, e.g. A0=1/7,A1=2/7")
    common.add_argument("--seed", type=int, default=None, help="seed for parameter draws (env FUCHSIA_SEED)")
    common.add_argument("--draws", type=int, default=None, help="number of parameter draws")
    common.add_argument("--n", type=int, default=None, help="series or recurrence truncation")
    common.add_argument("--tol", type=float, default=None, help="relative tolerance for float checks")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(prog="fuchsia", description="Exact Fuchsian operator toolkit and verifier.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(fn=fn)
        return p

    add("list", cmd_list, "list operators, families, recurrences and checks")
    p = add("make", cmd_make, "build a catalog operator")
    p.add_argument("--op", required=True)
    p = add("scheme", cmd_scheme, "local exponents against the tabulated Riemann scheme")
    p.add_argument("--op", required=True)
    p = add("mc", cmd_mc, "middle convolution of a catalog operator")
    p.add_argument("--op", required=True)
    p.add_argument("--mu", required=True)
    p = add("ad", cmd_ad, "addition by prod (x-c)^lambda")
    p.add_argument("--op", required=True)
    p.add_argument("--factors", required=True, help="point:exponent pairs, e.g. 0:1/3,1:-2/5")
    p = add("series", cmd_series, "Frobenius series or a named closed-form family")
    p.add_argument("--op")
    p.add_argument("--point")
    p.add_argument("--rho")
    p.add_argument("--family")
    p.add_argument("--expr")
    p = add("recurrence", cmd_recurrence, "coefficient recurrence at a point, or a displayed one by name")
    p.add_argument("--op")
    p.add_argument("--point")
    p.add_argument("--rho")
    p.add_argument("--name", choices=recurrence_names())
    p = add("invariant", cmd_invariant, "invariant H(n) of a displayed recurrence")
    p.add_argument("--name", required=True, choices=recurrence_names())
    p.add_argument("--at")
    p = add("gauge", cmd_gauge, "gauge factor between a displayed recurrence and a parameter list")
    p.add_argument("--name", required=True, choices=recurrence_names())
    p.add_argument("--list", required=True)
    p = add("4f3", cmd_4f3, "evaluate a 4F3 at 1")
    p.add_argument("--alphas", required=True)
    p.add_argument("--betas", required=True)
    p = add("verify", cmd_verify, "run named checks")
    p.add_argument("ids", nargs="*")
    p.add_argument("--criterion", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p = add("pfaffian-check", cmd_pfaffian, "integrability of the Pfaffian forms")
    p.add_argument("--system", required=True, choices=["z3", "z2"])
    p.add_argument("--jobs", type=int, default=1)
    p = add("repro-all", cmd_repro_all, "run the full acceptance matrix")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    start = time.perf_counter()
    report: dict = {"certificate_version": CERTIFICATE_VERSION, "command": args.command}
    code = 0
    try:
        if args.seed is None:
            args.seed = _default_seed()
        report.update(
            seed=args.seed,
            draws=args.draws,
            n=args.n,
            tol=args.tol,
        )
        report.update(args.fn(args))
        code = 0 if report.get("status") == "pass" else 1
    except (UsageError, *USAGE_ERRORS) as ex:
        report.update(status="usage_error", error=f"{type(ex).__name__}: {ex}")
        code = 2
    except (FuchsiaError, ArithmeticError, ValueError) as ex:
        report.update(status="error", error=f"{type(ex).__name__}: {ex}")
        code = 1
    report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    json.dump(report, out, indent=2 if args.pretty else None, sort_keys=False, default=str)
    out.write("\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
